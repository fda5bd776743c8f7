#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// popen-based driver for CLI contract checks.
struct CliResult {
    int exit_code = -1;
    std::string output; // stdout only
};

inline CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = std::string(GARSIA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

inline std::string temp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return {};
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), got);
    std::fclose(f);
    return out;
}
