#pragma once

#include <stdexcept>
#include <string>

namespace garsia {

// Mirrors the status codes of the public C API (include/garsia/garsia.h).
enum class Status {
    Ok = 0,
    ParseError = 1,
    DomainError = 2,
    BudgetExceeded = 3,
    NoBeta1 = 4,
    AmbiguousBeta1 = 5,
    UnitModulus = 6,
    NoConvergence = 7,
    Inapplicable = 8,
    BadArgument = 9,
    Internal = 10,
};

const char* to_string(Status s);

class Error : public std::runtime_error {
public:
    Error(Status s, const std::string& what) : std::runtime_error(what), status_(s) {}
    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

} // namespace garsia
