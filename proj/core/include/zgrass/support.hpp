#ifndef ZGRASS_SUPPORT_HPP
#define ZGRASS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zgrass/grading.hpp"

namespace zgrass {

/// Outcome of a bounded support-membership search. "yes" carries a witness
/// vector alpha with sum alpha_j r_j = z and 0 <= alpha_j <= v_j. "exact_no"
/// is returned only when a proven criterion rules z out; otherwise a failed
/// bounded search reports not_found_within_bound.
struct SupportQuery {
    enum class Status { yes, not_found_within_bound, exact_no };
    Status status;
    std::vector<std::int64_t> witness;  // when yes
    std::string reason;                 // when exact_no
};

SupportQuery support_contains(const GradingSpec& spec, std::int64_t z,
                              std::int64_t bound = 40);

/// Is the support a subgroup of Z? Exact for n <= 3; n > 3 has no complete
/// criterion and reports unsupported (see the one-sided tests below).
struct SubgroupResult {
    enum class Kind { subgroup, not_subgroup, unsupported };
    Kind kind;
    std::int64_t d = 0;  // the generator of the support when kind == subgroup
    std::string detail;
};

SubgroupResult subgroup_test(const GradingSpec& spec);

/// Full-support criterion for three blocks (-infinite, v2, infinite).
/// Preconditions: r1 < 0 < r3, gcd(r1, r2, r3) = 1. Case A: gcd(r1, r3) = 1.
/// Case B: d' = gcd(r1, r3) > 1 and v2 >= d' - 1.
enum class FullSupportCase { a, b };

struct FullSupport3 {
    bool full;
    std::optional<FullSupportCase> tag;  // set when full
    std::int64_t dprime;                 // gcd(r1, r3)
};

FullSupport3 full_support_3(std::int64_t r1, std::int64_t r2, std::int64_t r3,
                            UpperIndex v2);

/// Condition on a triple of block parameters: coprime as a whole while every
/// pair shares a factor. Requires a, b > 0 and -b < c < a.
bool satisfies_bhat(std::int64_t a, std::int64_t b, std::int64_t c);

/// Minimal representation of a target as a non-negative combination of the
/// given generators: total = sum of coefficients is least possible, ties
/// broken by the lexicographically least coefficient vector. Exhaustive
/// search with per-coefficient bound; nullopt when nothing is found.
struct MinimalRep {
    std::int64_t target;
    std::vector<std::int64_t> coeffs;
    std::int64_t total;
};

std::optional<MinimalRep> minimal_rep(const std::vector<std::int64_t>& generators,
                                      std::int64_t target, std::int64_t bound = 40);

/// Parity cases of the minimal representations of +d and -d over (a, -b):
/// c1 = both totals even, c2 = (even, odd), c3 = (odd, even), c4 = both odd.
enum class PairCase { c1, c2, c3, c4 };
enum class TripleCase { c1, c2, c3, c4 };

const char* to_string(PairCase c);
const char* to_string(TripleCase c);

/// How far the centre reaches: every component of degree in <d> (d_central)
/// or in <2d> (two_d_central) carries unboundedly many disjoint even-length
/// monomials under the untruncated grading.
struct Centrality {
    enum class Kind { d_central, two_d_central };
    Kind kind;
    std::int64_t d;
    std::int64_t modulus() const { return kind == Kind::d_central ? d : 2 * d; }
};

struct CaseReport {
    PairCase pair_case;
    std::optional<TripleCase> triple_case;  // set when gcd(a,b,c) = 1
    Centrality centrality;
    MinimalRep rep_plus, rep_minus;                        // +-d over (a, -b)
    std::optional<MinimalRep> triple_plus, triple_minus;   // +-1 over (a, -b, c)
};

/// Pair part only (c-independent).
CaseReport classify_pair(std::int64_t a, std::int64_t b, std::int64_t bound = 40);

/// Full classification; d must equal gcd(a, b).
CaseReport classify_cases(std::int64_t a, std::int64_t b, std::int64_t c,
                          std::int64_t d, std::int64_t bound = 40);

/// The variety of Z-graded algebras generated by a full-support three-block
/// grading with parameters (a, b, c, k).
struct VarietyTag {
    enum class Family {
        can,      // commutator/anticommutator rules by plain degree parity
        ref_101,  // pulled back from the k-bounded two-block reference grading
        ref_102,  // pulled back from the alternating reference grading
        v1,       // triple commutators plus bounded products (d = gcd(a,b) > 1)
        v2,       // pair rules by residue type plus bounded products
    };
    Family family;
    UpperIndex k = UpperIndex::infinity();
    std::int64_t d = 1;

    std::string to_string() const;
};

VarietyTag variety_of(std::int64_t a, std::int64_t b, std::int64_t c, UpperIndex k);

/// One-sided tests for n > 3 (no exact criterion exists at that generality).
/// Sufficient for full support: some coprime pair r_i < 0 < r_j with
/// v_i = v_j = infinite. Necessary for the support to be a subgroup: some
/// pair r_i < 0 < r_j with v_i = v_j = infinite.
bool full_support_sufficient(const GradingSpec& spec);
bool subgroup_necessary(const GradingSpec& spec);

}  // namespace zgrass

#endif
