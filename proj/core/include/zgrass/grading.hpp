#ifndef ZGRASS_GRADING_HPP
#define ZGRASS_GRADING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zgrass/exterior.hpp"

namespace zgrass {

/// Block multiplicity: a non-negative integer or infinity.
class UpperIndex {
public:
    static UpperIndex finite(std::int64_t n);
    static UpperIndex infinity() { return UpperIndex(true, 0); }

    bool is_infinite() const { return infinite_; }

    /// Finite value; throws when infinite.
    std::int64_t value() const;

    /// True when infinite or value() >= n.
    bool at_least(std::int64_t n) const { return infinite_ || value_ >= n; }

    friend bool operator==(UpperIndex a, UpperIndex b) {
        return a.infinite_ == b.infinite_ && a.value_ == b.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    UpperIndex(bool inf, std::int64_t v) : infinite_(inf), value_(v) {}
    bool infinite_;
    std::int64_t value_;
};

/// Lower indices r_1 < ... < r_n (the block degrees) paired with upper
/// indices v_1, ..., v_n (the block multiplicities).
class GradingSpec {
public:
    GradingSpec(std::vector<std::int64_t> lower, std::vector<UpperIndex> upper);

    int block_count() const { return static_cast<int>(lower_.size()); }
    const std::vector<std::int64_t>& lower() const { return lower_; }
    const std::vector<UpperIndex>& upper() const { return upper_; }

    /// gcd of all block degrees (0 only for the single-block degree-0 spec).
    std::int64_t degree_gcd() const;

    friend bool operator==(const GradingSpec& a, const GradingSpec& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }

private:
    std::vector<std::int64_t> lower_;
    std::vector<UpperIndex> upper_;
};

/// Homogeneity verdict for an element: the zero element lies in every
/// component, a nonzero element either has a single degree or is mixed.
struct Homogeneity {
    enum class Kind { all_degrees, degree, not_homogeneous };
    Kind kind;
    std::int64_t z = 0;  // meaningful only when kind == degree

    bool is_degree(std::int64_t d) const {
        return kind == Kind::all_degrees || (kind == Kind::degree && z == d);
    }
};

/// A concrete truncation: counts[j] generators realized in block j, assigned
/// contiguously (block 1 owns e_1..e_{counts[1]}, block 2 the next run, ...).
/// Queries are pure; the model is immutable after construction.
class FiniteModel {
public:
    FiniteModel(GradingSpec spec, std::vector<std::int64_t> counts);

    const GradingSpec& spec() const { return spec_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    int rank() const { return rank_; }

    /// 0-based block of generator i (1-based). Throws when out of range.
    int block_of(int generator) const;
    std::int64_t generator_degree(int generator) const;

    /// Sum of the generator degrees of w; the unit has degree 0.
    std::int64_t degree(Monomial w) const;

    /// degree(w) mod d, canonical representative in {0,...,d-1}. Requires d >= 1.
    std::int64_t quotient_degree(Monomial w, std::int64_t d) const;

    /// All monomials of degree z with length <= max_length, in canonical order.
    std::vector<Monomial> component_basis(std::int64_t z, int max_length) const;

    /// All monomials whose degree is congruent to r mod d, length <= max_length.
    std::vector<Monomial> component_basis_mod(std::int64_t r, std::int64_t d,
                                              int max_length) const;

    Homogeneity homogeneity(const Element& a) const;

private:
    GradingSpec spec_;
    std::vector<std::int64_t> counts_;
    std::vector<std::int64_t> gen_degree_;  // per generator, 0-based
    int rank_;
};

inline std::int64_t canonical_residue(std::int64_t z, std::int64_t d) {
    std::int64_t r = z % d;
    return r < 0 ? r + d : r;
}

/// Non-negative gcd of two integers.
std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace zgrass

#endif
