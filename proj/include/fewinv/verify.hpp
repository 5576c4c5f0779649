#pragma once

#include <string>
#include <vector>

namespace fewinv {

struct CheckResult {
    std::string name;
    std::string parameters;
    bool passed = false;
    std::string witness; // minimal failing element/index; empty on pass
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    void add(std::string name, std::string parameters, bool passed, std::string witness = "");
    void merge(const VerificationReport& other);
    int passed_count() const;
    int failed_count() const;
    bool all_passed() const { return failed_count() == 0; }
};

struct VerifyOptions {
    int series_order = 40;        // generating-function identities
    int r_agreement_order = 200;  // agreement of the three R constructions
    int knuth_netto_max = 60;     // closed form vs table
    int divisor_identity_order = 60;
    int m_coefficient_order = 200;
    int cycle_type_max = 15;
    int row_check_max = 20;       // palindromic rows summing to n!
    int involution_max = 8;       // exhaustive involution/bijection checks
    int factorization_max = 8;    // exhaustive factorization bijection (i = 0,1,2)
    int counts_max = 8;           // oracle equivalences and signed sums
    int inv_catalan_max = 12;
    int mblock_max = 12;
};

VerificationReport verify_series_identities(const VerifyOptions& options = {});
VerificationReport verify_involutions(const VerifyOptions& options = {});
VerificationReport verify_factorization(const VerifyOptions& options = {});
VerificationReport verify_counts(const VerifyOptions& options = {});
VerificationReport verify_all(const VerifyOptions& options = {});

} // namespace fewinv
