#ifndef STACKSORT_VERIFY_HPP
#define STACKSORT_VERIFY_HPP

// verify.hpp
//
// Exhaustive desk-scale checks of the structural claims the library is
// built on. Each claim is a named suite scanning every permutation length
// up to a caller-chosen bound and reporting pass/fail with the first
// counterexample found. These back the `verify` CLI subcommand.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stacksort/dynamics.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

enum class Claim {
    thm1,          // fertility 1 <=> sorted with (n-1)/2 descents
    thm2,          // max descents over t-sorted permutations = floor((n-t)/2)
    thm3,          // same-parity extremal set = left-to-right-maxima pattern
    thm4,          // sorted <=> a valid hook configuration exists
    cor1,          // uniquely sorted => no window p[l+1] < p[l+2] < p[l]
    claim1,        // descent bottoms survive one sorting pass
    west,          // closed-form 2-pass-sortable count matches brute force
    catalan,       // Catalan number matches 1-pass-sortable and 231-avoiding counts
    symmetry,      // first-entry distribution is palindromic
    hotspot_shift  // hotspot distribution = first-entry distribution shifted by 1
};

std::vector<Claim> all_claims();
std::string claim_name(Claim c);
std::optional<Claim> claim_from_name(std::string_view name);

struct VerificationResult {
    std::string claim;
    std::string range;  // human-readable description of the scanned domain
    bool pass = false;
    std::optional<Permutation> counterexample;
    std::string detail;  // e.g. which bucket or pair disagreed
    double elapsed_seconds = 0.0;
};

/// Runs one claim over all lengths n <= max_n (claims quantified over k use
/// 2k+1 <= max_n). max_n must not exceed dyn.cap().
VerificationResult run_claim(Dynamics& dyn, Claim c, int max_n);

nlohmann::json verification_json(const VerificationResult& r);

}  // namespace stacksort

#endif
