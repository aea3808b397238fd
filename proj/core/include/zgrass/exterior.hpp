#ifndef ZGRASS_EXTERIOR_HPP
#define ZGRASS_EXTERIOR_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zgrass/rational.hpp"

namespace zgrass {

/// Basis monomial e_{i_1}...e_{i_k} with i_1 < ... < i_k, stored as a bit set
/// (bit i-1 set iff e_i occurs). The empty monomial is the unit 1.
class Monomial {
public:
    static constexpr int max_rank = 64;

    constexpr Monomial() = default;

    static constexpr Monomial unit() { return Monomial{}; }

    /// Single generator e_i, 1 <= i <= max_rank.
    static Monomial generator(int i);

    /// Builds e_{i_1}...e_{i_k} from distinct indices in any order (the set,
    /// not the product: no sign is produced). Throws on duplicates.
    static Monomial from_indices(std::span<const int> indices);
    static Monomial from_indices(std::initializer_list<int> indices);

    static constexpr Monomial from_bits(std::uint64_t bits) { return Monomial(bits); }

    constexpr std::uint64_t bits() const { return bits_; }
    int length() const { return std::popcount(bits_); }
    bool is_unit() const { return bits_ == 0; }
    bool contains(int i) const;
    bool disjoint(Monomial other) const { return (bits_ & other.bits_) == 0; }

    /// Indices in increasing order.
    std::vector<int> indices() const;

    /// Largest generator index, 0 for the unit.
    int max_index() const;

    friend constexpr bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

    /// Canonical order: by length, then lexicographically on the increasing
    /// index sequence. For equal lengths the first differing generator is the
    /// lowest set bit of the xor, and it belongs to the smaller monomial.
    friend bool operator<(Monomial a, Monomial b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) return false;
        return (a.bits_ & (diff & -diff)) != 0;
    }

private:
    explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

enum class Parity { even, odd };

inline Parity length_parity(Monomial w) {
    return (w.length() % 2 == 0) ? Parity::even : Parity::odd;
}

/// Nonzero product of two basis monomials: a signed basis monomial.
struct MonoProduct {
    int sign;  // +1 or -1
    Monomial product;
};

/// Product of basis monomials under e_i e_j = -e_j e_i. Returns nullopt when
/// the supports overlap (a repeated generator squares to zero); otherwise the
/// product is the union with sign (-1)^inv, inv = #{(i,j) : i in a, j in b, i > j}.
std::optional<MonoProduct> mono_mul(Monomial a, Monomial b);

/// Element of the Grassmann algebra truncated to generators e_1..e_m:
/// a finite sum of basis monomials with nonzero exact rational coefficients,
/// kept in canonical form. Immutable value semantics; all operations on
/// mismatched ranks throw.
class Element {
public:
    explicit Element(int rank);

    static Element zero(int rank) { return Element(rank); }
    static Element scalar(int rank, const Rational& c);
    static Element monomial(int rank, Monomial w, const Rational& c = 1);
    static Element generator(int rank, int i);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    /// Coefficient of w (zero if absent).
    Rational coeff(Monomial w) const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Rational& c, const Element& a);
    friend Element operator*(const Element& a, const Rational& c) { return c * a; }
    friend bool operator==(const Element& a, const Element& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    Element& operator+=(const Element& other);
    Element& operator*=(const Element& other);

    /// Adds c*w in place, dropping the term if it cancels.
    void add_term(Monomial w, const Rational& c);

private:
    void check_same_rank(const Element& other) const;
    int rank_;
    std::map<Monomial, Rational> terms_;
};

/// [a, b] = ab - ba.
Element commutator(const Element& a, const Element& b);

/// Left-normed long commutator [a_1,...,a_n] = [[a_1,...,a_{n-1}], a_n].
/// Requires n >= 2.
Element commutator(std::span<const Element> args);

/// a o b = ab + ba.
Element anticommutator(const Element& a, const Element& b);

/// Renders an element with terms in canonical (length, lexicographic) order,
/// e.g. "2*e1e2 - 1/3*e3". The zero element renders as "0". Round-trips
/// through parse_element.
std::string format(const Element& a);

/// Parses the textual element format. Generators may appear in any order
/// inside a monomial and are multiplied out (so "e2e1" is -e1e2 and "e1e1"
/// vanishes). Throws zgrass::error with a position message on bad syntax.
Element parse_element(const std::string& text, int rank);

}  // namespace zgrass

#endif
