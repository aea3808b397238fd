#ifndef ZGRASS_VERIFY_HPP
#define ZGRASS_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zgrass/freealg.hpp"
#include "zgrass/grading.hpp"
#include "zgrass/support.hpp"

namespace zgrass {

/// Search scope for the brute-force identity oracle. Multilinear polynomials
/// are checked exhaustively over basis-monomial substitutions of matching
/// degree and length <= length_cap; anything else gets seeded random sampling.
struct Scope {
    int length_cap = 4;
    int random_samples = 10000;
    std::uint64_t seed = 1;
    int threads = 1;

    /// length cap 4 up to degree 3, cap 3 at degree 4 and beyond.
    static Scope for_degree(int poly_degree);

    std::string describe(const FiniteModel& model) const;
};

/// Outcome of an identity check. holds_in_scope is a statement about the
/// declared scope only; a counterexample is absolute and re-evaluates to a
/// nonzero element.
struct Verdict {
    enum class Status { holds_in_scope, counterexample };
    Status status;
    std::string scope;
    bool randomized = false;
    std::vector<std::pair<GVar, Element>> assignment;  // when counterexample
    std::optional<Element> value;                      // when counterexample

    bool holds() const { return status == Status::holds_in_scope; }
};

/// Is f a graded identity of the truncated model, within the scope?
/// Multilinear f: exhaustive over tuples of pairwise-disjoint basis monomials
/// (overlapping tuples vanish term-by-term and are skipped); first nonzero
/// value in canonical enumeration order is reported. Non-multilinear f:
/// randomized evaluation on homogeneous elements.
Verdict is_graded_identity(const GradedPolynomial& f, const FiniteModel& model,
                           const Scope& scope);

/// Compares the verdict for f (over Z) with the verdict for its reduction
/// mod d on the same model read as Z_d-graded, at the same scope.
struct QuotientReport {
    bool agree;
    Verdict integral;
    Verdict quotient;
};

QuotientReport check_quotient(const GradedPolynomial& f, const FiniteModel& model,
                              std::int64_t d, const Scope& scope);

/// Compares the verdict for f on the model of spec' = scaled_spec with lower
/// indices divided by d against the verdict for phi_d(f) on the scaled_spec
/// model, same counts and scope. Throws when d does not divide every index.
struct ScalingReport {
    bool agree;
    Verdict reduced;
    Verdict scaled;
};

ScalingReport check_scaling(const GradedPolynomial& f, const GradingSpec& scaled_spec,
                            const std::vector<std::int64_t>& counts, std::int64_t d,
                            const Scope& scope);

/// Degrees realized by monomials of length <= max_length in the truncation.
std::set<std::int64_t> support_bruteforce(const FiniteModel& model, int max_length);

/// Degrees realizable by the spec with coefficient bound per block, clipped
/// to [-window, window].
std::set<std::int64_t> spec_support_window(const GradingSpec& spec,
                                           std::int64_t window, std::int64_t bound);

/// Cross-checks the criteria against the bounded enumeration.
struct SupportCompareReport {
    bool consistent;
    SubgroupResult criterion;
    std::set<std::int64_t> brute;
    std::vector<std::int64_t> mismatches;  // degrees where prediction and search differ
    std::string detail;
};

SupportCompareReport compare_support(const GradingSpec& spec, std::int64_t window = 40,
                                     std::int64_t bound = 40);

/// A product of k1+1 variables of grade c that separates the truncations with
/// k1 and k2 middle generators: an identity of the first, a counterexample on
/// the second. Both facts are verified before returning; failure to verify
/// throws. Requires k1 < k2, k1 >= d-1, gcd(c, d) = 1, d >= 2.
struct ChainWitness {
    GradedPolynomial poly;
    std::int64_t a, b;  // ambient block degrees chosen for the models
    GradingSpec spec_k1, spec_k2;
    Verdict at_k1, at_k2;
};

ChainWitness chain_witness(std::int64_t d, std::int64_t c, std::int64_t k1,
                           std::int64_t k2);

}  // namespace zgrass

#endif
