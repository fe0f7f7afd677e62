#include "stacksort/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "stacksort/descents.hpp"
#include "stacksort/extremal.hpp"
#include "stacksort/hooks.hpp"
#include "stacksort/stack_sort.hpp"
#include "stacksort/stats.hpp"

namespace stacksort {
namespace {

template <typename Fn>
void for_each_in_sn(int n, Fn&& fn) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

struct Failure {
    std::optional<Permutation> counterexample;
    std::string detail;
};

using MaybeFailure = std::optional<Failure>;

MaybeFailure check_thm1(Dynamics& dyn, int max_n) {
    MaybeFailure failure;
    for (int n = 1; n <= max_n && !failure; ++n) {
        dyn.for_each_sorted(n, [&](const std::vector<int>& perm, std::uint64_t fert) {
            if (failure) return;
            const bool unique = fert == 1;
            const bool half_descents = 2 * count_descents(perm) == n - 1;
            if (unique != half_descents) {
                failure = Failure{Permutation(perm),
                                  "fertility " + std::to_string(fert) + " but " +
                                      std::to_string(count_descents(perm)) + " descents"};
            }
        });
        // Permutations outside the image have fertility 0 and are not sorted,
        // so both sides of the equivalence are false there.
    }
    return failure;
}

MaybeFailure check_thm2(Dynamics& dyn, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for (int t = 1; t <= n; ++t) {
            int best = 0;
            Permutation arg;
            for (const Permutation& p : dyn.image_of_iterate(n, t)) {
                const int d = count_descents(p);
                if (d >= best) {
                    best = d;
                    arg = p;
                }
            }
            if (best != max_descents(n, t)) {
                return Failure{arg, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                                        ": max descents " + std::to_string(best) +
                                        ", bound says " +
                                        std::to_string(max_descents(n, t))};
            }
        }
    }
    return std::nullopt;
}

MaybeFailure check_thm3(Dynamics& dyn, int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        for (int t = 2; t <= n; ++t) {
            if ((n - t) % 2 != 0) continue;
            const int bound = (n - t) / 2;
            std::vector<Permutation> attained;
            for (const Permutation& p : dyn.image_of_iterate(n, t)) {
                if (count_descents(p) == bound) attained.push_back(p);
            }
            const std::vector<Permutation> pattern = enumerate_extremal_pattern(n, t);
            if (attained != pattern) {
                // Both lists are lex-sorted; report the first disagreement.
                std::size_t i = 0;
                while (i < attained.size() && i < pattern.size() &&
                       attained[i] == pattern[i]) {
                    ++i;
                }
                const Permutation& bad =
                    i < attained.size() ? attained[i] : pattern[i];
                return Failure{bad, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                                        ": extremal set has " +
                                        std::to_string(attained.size()) +
                                        " elements, pattern set " +
                                        std::to_string(pattern.size())};
            }
            if (BigInt(attained.size()) != double_factorial(n - t - 1)) {
                return Failure{std::nullopt,
                               "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                                   ": count " + std::to_string(attained.size()) +
                                   " != (n-t-1)!!"};
            }
        }
    }
    return std::nullopt;
}

MaybeFailure check_thm4(Dynamics& dyn, int max_n) {
    MaybeFailure failure;
    for (int n = 1; n <= max_n && !failure; ++n) {
        for_each_in_sn(n, [&](const std::vector<int>& raw) {
            if (failure) return;
            const Permutation p(raw);
            const bool via_hooks = is_sorted_via_vhc(p);
            const bool via_scan = dyn.is_sorted(p);
            if (via_hooks != via_scan) {
                failure = Failure{p, via_hooks ? "hook configuration exists but no preimage"
                                               : "preimage exists but no hook configuration"};
            }
        });
    }
    return failure;
}

MaybeFailure check_cor1(Dynamics& dyn, int max_n) {
    MaybeFailure failure;
    for (int n = 1; n <= max_n && !failure; ++n) {
        dyn.for_each_sorted(n, [&](const std::vector<int>& perm, std::uint64_t fert) {
            if (failure || fert != 1) return;
            const Permutation p(perm);
            if (auto l = corollary1_witness(p)) {
                failure = Failure{p, "uniquely sorted but p[l+1] < p[l+2] < p[l] at l = " +
                                         std::to_string(*l)};
            }
        });
    }
    return failure;
}

MaybeFailure check_claim1(int max_n) {
    MaybeFailure failure;
    std::vector<int> out;
    std::vector<int> scratch;
    for (int n = 1; n <= max_n && !failure; ++n) {
        for_each_in_sn(n, [&](const std::vector<int>& raw) {
            if (failure) return;
            stack_sort_into(raw, out, scratch);
            const auto before = descent_stats(Permutation(raw)).descent_bottoms;
            const auto after = descent_stats(Permutation(out)).descent_bottoms;
            if (!std::includes(before.begin(), before.end(), after.begin(), after.end())) {
                failure = Failure{Permutation(raw),
                                  "a descent bottom of the output is not one of the input"};
            }
        });
    }
    return failure;
}

MaybeFailure check_west(int max_n) {
    std::vector<int> once;
    std::vector<int> twice;
    std::vector<int> scratch;
    for (int n = 1; n <= max_n; ++n) {
        std::uint64_t brute = 0;
        for_each_in_sn(n, [&](const std::vector<int>& raw) {
            stack_sort_into(raw, once, scratch);
            stack_sort_into(once, twice, scratch);
            if (std::is_sorted(twice.begin(), twice.end())) ++brute;
        });
        if (west_count(n) != brute) {
            return Failure{std::nullopt, "n=" + std::to_string(n) + ": formula " +
                                             west_count(n).str() + ", brute force " +
                                             std::to_string(brute)};
        }
    }
    return std::nullopt;
}

MaybeFailure check_catalan(int max_n) {
    std::vector<int> out;
    std::vector<int> scratch;
    for (int n = 1; n <= max_n; ++n) {
        std::uint64_t one_pass = 0;
        MaybeFailure mismatch;
        for_each_in_sn(n, [&](const std::vector<int>& raw) {
            if (mismatch) return;
            stack_sort_into(raw, out, scratch);
            const bool sorted_now = std::is_sorted(out.begin(), out.end());
            const bool avoids = avoids_231(Permutation(raw));
            if (sorted_now != avoids) {
                mismatch = Failure{Permutation(raw),
                                   "one-pass sortability and 231-avoidance disagree"};
                return;
            }
            one_pass += sorted_now ? 1 : 0;
        });
        if (mismatch) return mismatch;
        if (catalan(n) != one_pass) {
            return Failure{std::nullopt, "n=" + std::to_string(n) + ": Catalan " +
                                             catalan(n).str() + ", brute force " +
                                             std::to_string(one_pass)};
        }
    }
    return std::nullopt;
}

// Lexicographically least uniquely sorted permutation in S_{2k+1} with the
// given first entry, used as a concrete witness for distribution mismatches.
std::optional<Permutation> bucket_representative(Dynamics& dyn, int k, int first_entry) {
    std::optional<Permutation> rep;
    dyn.for_each_sorted(2 * k + 1, [&](const std::vector<int>& perm, std::uint64_t fert) {
        if (!rep && fert == 1 && perm.front() == first_entry) rep = Permutation(perm);
    });
    return rep;
}

MaybeFailure check_symmetry(Dynamics& dyn, int max_n) {
    for (int k = 0; 2 * k + 1 <= max_n; ++k) {
        const Distribution d = first_entry_distribution(dyn, k);
        for (int l = 1; l <= 2 * k + 1; ++l) {
            const auto at = [&](int key) -> std::uint64_t {
                auto it = d.buckets.find(key);
                return it == d.buckets.end() ? 0 : it->second;
            };
            if (at(l) != at(2 * k + 2 - l)) {
                auto rep = bucket_representative(dyn, k, at(l) > 0 ? l : 2 * k + 2 - l);
                return Failure{rep, "k=" + std::to_string(k) + ": bucket " +
                                        std::to_string(l) + " has " + std::to_string(at(l)) +
                                        ", mirror bucket " + std::to_string(2 * k + 2 - l) +
                                        " has " + std::to_string(at(2 * k + 2 - l))};
            }
        }
    }
    return std::nullopt;
}

MaybeFailure check_hotspot_shift(Dynamics& dyn, int max_n) {
    for (int k = 1; 2 * k + 1 <= max_n; ++k) {
        const Distribution fe = first_entry_distribution(dyn, k);
        const Distribution hs = hotspot_distribution(dyn, k);
        std::map<int, std::uint64_t> shifted;
        for (const auto& [key, count] : fe.buckets) shifted[key - 1] = count;
        if (hs.buckets != shifted) {
            int bad_key = 0;
            for (const auto& [key, count] : shifted) {
                auto it = hs.buckets.find(key);
                if (it == hs.buckets.end() || it->second != count) {
                    bad_key = key;
                    break;
                }
            }
            return Failure{bucket_representative(dyn, k, bad_key + 1),
                           "k=" + std::to_string(k) + ": hotspot bucket " +
                               std::to_string(bad_key) +
                               " does not match first-entry bucket " +
                               std::to_string(bad_key + 1)};
        }
    }
    return std::nullopt;
}

std::string range_text(Claim c, int max_n) {
    switch (c) {
        case Claim::thm2:
            return "n <= " + std::to_string(max_n) + ", 1 <= t <= n";
        case Claim::thm3:
            return "n <= " + std::to_string(max_n) + ", 2 <= t <= n, n = t (mod 2)";
        case Claim::symmetry:
            return "2k+1 <= " + std::to_string(max_n);
        case Claim::hotspot_shift:
            return "1 <= k, 2k+1 <= " + std::to_string(max_n);
        default:
            return "n <= " + std::to_string(max_n);
    }
}

}  // namespace

std::vector<Claim> all_claims() {
    return {Claim::thm1, Claim::thm2,    Claim::thm3, Claim::thm4,     Claim::cor1,
            Claim::claim1, Claim::west, Claim::catalan, Claim::symmetry,
            Claim::hotspot_shift};
}

std::string claim_name(Claim c) {
    switch (c) {
        case Claim::thm1: return "thm1";
        case Claim::thm2: return "thm2";
        case Claim::thm3: return "thm3";
        case Claim::thm4: return "thm4";
        case Claim::cor1: return "cor1";
        case Claim::claim1: return "claim1";
        case Claim::west: return "west";
        case Claim::catalan: return "catalan";
        case Claim::symmetry: return "symmetry";
        case Claim::hotspot_shift: return "hotspot-shift";
    }
    return "unknown";
}

std::optional<Claim> claim_from_name(std::string_view name) {
    for (Claim c : all_claims()) {
        if (name == claim_name(c)) return c;
    }
    if (name == "hotspot_shift") return Claim::hotspot_shift;
    return std::nullopt;
}

VerificationResult run_claim(Dynamics& dyn, Claim c, int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be positive");
    if (max_n > dyn.cap()) throw CapExceeded(max_n, dyn.cap());

    const auto start = std::chrono::steady_clock::now();
    MaybeFailure failure;
    switch (c) {
        case Claim::thm1: failure = check_thm1(dyn, max_n); break;
        case Claim::thm2: failure = check_thm2(dyn, max_n); break;
        case Claim::thm3: failure = check_thm3(dyn, max_n); break;
        case Claim::thm4: failure = check_thm4(dyn, max_n); break;
        case Claim::cor1: failure = check_cor1(dyn, max_n); break;
        case Claim::claim1: failure = check_claim1(max_n); break;
        case Claim::west: failure = check_west(max_n); break;
        case Claim::catalan: failure = check_catalan(max_n); break;
        case Claim::symmetry: failure = check_symmetry(dyn, max_n); break;
        case Claim::hotspot_shift: failure = check_hotspot_shift(dyn, max_n); break;
    }
    const auto stop = std::chrono::steady_clock::now();

    VerificationResult result;
    result.claim = claim_name(c);
    result.range = range_text(c, max_n);
    result.pass = !failure.has_value();
    if (failure) {
        result.counterexample = failure->counterexample;
        result.detail = failure->detail;
    }
    result.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    return result;
}

nlohmann::json verification_json(const VerificationResult& r) {
    nlohmann::json out;
    out["claim"] = r.claim;
    out["range"] = r.range;
    out["status"] = r.pass ? "pass" : "fail";
    if (r.counterexample) {
        out["counterexample"] = r.counterexample->entries();
    } else {
        out["counterexample"] = nullptr;
    }
    out["detail"] = r.detail;
    out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

}  // namespace stacksort
