#include <doctest.h>

#include "fewinv/verify.hpp"

using namespace fewinv;

TEST_CASE("report bookkeeping") {
    VerificationReport report;
    report.add("a", "", true);
    report.add("b", "n=2", false, "witness");
    CHECK(report.passed_count() == 1);
    CHECK(report.failed_count() == 1);
    CHECK_FALSE(report.all_passed());

    VerificationReport other;
    other.add("c", "", true);
    report.merge(other);
    CHECK(report.passed_count() == 2);
    CHECK(report.checks.size() == 3);
}

TEST_CASE("verification suites pass at desk-test bounds") {
    VerifyOptions options;
    options.series_order = 24;
    options.r_agreement_order = 64;
    options.knuth_netto_max = 24;
    options.divisor_identity_order = 24;
    options.m_coefficient_order = 64;
    options.cycle_type_max = 10;
    options.row_check_max = 12;
    options.involution_max = 6;
    options.factorization_max = 6;
    options.counts_max = 6;
    options.inv_catalan_max = 9;
    options.mblock_max = 9;

    const VerificationReport report = verify_all(options);
    for (const CheckResult& c : report.checks) {
        INFO(c.name, " ", c.parameters, " ", c.witness);
        CHECK(c.passed);
    }
    CHECK(report.all_passed());
    CHECK(report.checks.size() >= 20);
}
