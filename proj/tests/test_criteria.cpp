#include <doctest.h>

#include <cmath>

#include "criteria.hpp"
#include "error.hpp"

using garsia::dimension_report;
using garsia::Error;
using garsia::IntPolynomial;
using garsia::Method;
using garsia::Status;
using garsia::threshold_criterion;
using garsia::Verdict;

TEST_CASE("threshold: x^4-x-1 certifies at 0.82 via its real conjugate") {
    Verdict v = threshold_criterion(1.220744084605759, -0.7244919590005157, 0.82);
    CHECK(v.certified);
    CHECK(v.value == doctest::Approx(0.6188960).epsilon(1e-5));
}

TEST_CASE("threshold: golden ratio sits exactly at ratio 1") {
    double phi = 1.6180339887498949;
    Verdict v = threshold_criterion(phi, -1.0 / phi, 0.82);
    CHECK_FALSE(v.certified);
    CHECK(v.value == doctest::Approx(1.0).epsilon(1e-12));
    Verdict v2 = threshold_criterion(phi, -1.0 / phi, 0.9804085);
    CHECK_FALSE(v2.certified);
}

TEST_CASE("threshold: modulus-1 conjugate is inapplicable, not false") {
    try {
        threshold_criterion(1.5, -1.0, 0.82);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.status() == Status::Inapplicable);
    }
    CHECK_THROWS_AS(threshold_criterion(1.5, 0.0, 0.82), Error);
}

TEST_CASE("threshold: monotone in the threshold") {
    for (double conj : {-0.7244919590005157, -1.487476001461, 0.595089298, -1.680420070225}) {
        Verdict a = threshold_criterion(1.3, conj, garsia::kThresholdOriginal);
        Verdict b = threshold_criterion(1.3, conj, garsia::kThresholdImproved);
        if (a.certified) CHECK(b.certified);
    }
}

TEST_CASE("threshold: depends only on |log|conj||") {
    double c = 1.380277569;
    Verdict base = threshold_criterion(1.220744, c, 0.82);
    for (double variant : {1.0 / c, -c, -1.0 / c}) {
        Verdict v = threshold_criterion(1.220744, variant, 0.82);
        CHECK(v.value == doctest::Approx(base.value).epsilon(1e-12));
        CHECK(v.certified == base.certified);
    }
}

TEST_CASE("threshold: normalized conjugate outside (1,2) is not certifying") {
    // conj = 0.25 normalizes to 4, outside the domain of the entropy bound
    Verdict v = threshold_criterion(1.01, 0.25, 0.82);
    CHECK_FALSE(v.certified);
    CHECK_FALSE(v.threshold_domain_ok);
}

TEST_CASE("dimension_report: x^5+x^4-x^3-x-1 certified via threshold") {
    Verdict v = dimension_report(IntPolynomial::parse("-1,-1,0,-1,1,1"), 0, 0.82);
    CHECK(v.certified);
    CHECK(v.method == Method::Threshold);
}

TEST_CASE("dimension_report: x^5-x^4+x^3-x-1 certified via box bound at n = 3") {
    Verdict v = dimension_report(IntPolynomial::parse("-1,-1,0,1,-1,1"), 5, 0.82);
    CHECK(v.certified);
    CHECK(v.method == Method::BoxBound);
    CHECK(v.n_used == 3);
    CHECK(v.mn == 4);
    CHECK(v.value == doctest::Approx(1.220951259).epsilon(1e-6));
}

TEST_CASE("dimension_report: x^5-x-1 stays inconclusive up to n = 8") {
    Verdict v = dimension_report(IntPolynomial::parse("-1,-1,0,0,0,1"), 8, 0.9804085);
    CHECK_FALSE(v.certified);
    CHECK(v.value < 1.0);
    CHECK(v.value > 0.0);
}

TEST_CASE("dimension_report: golden ratio is inconclusive with a positive bound") {
    Verdict v = dimension_report(IntPolynomial::parse("-1,-1,1"), 6, 0.9804085);
    CHECK_FALSE(v.certified);
    // the threshold route still bounds the entropy ratio by 0.9804085/1
    CHECK(v.value >= 0.98);
    CHECK(v.value < 1.0);
}

TEST_CASE("height_check") {
    garsia::HeightCheckResult a = garsia::height_check(IntPolynomial::parse("-1,-1,1"));
    CHECK(a.needed);
    CHECK(a.note.empty());
    garsia::HeightCheckResult b = garsia::height_check(IntPolynomial::parse("-3,0,1"));
    CHECK(b.needed);
    CHECK(!b.note.empty());
    garsia::HeightCheckResult c = garsia::height_check(IntPolynomial::parse("-3,0,1"), true);
    CHECK_FALSE(c.needed);
    garsia::HeightCheckResult d = garsia::height_check(IntPolynomial::parse("-1,-1,0,0,1"));
    CHECK(d.needed);
}
