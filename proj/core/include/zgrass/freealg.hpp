#ifndef ZGRASS_FREEALG_HPP
#define ZGRASS_FREEALG_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zgrass/grading.hpp"
#include "zgrass/rational.hpp"

namespace zgrass {

/// Degree label of a graded variable: an integer (Z-graded) or a residue
/// class r mod d (Z_d-graded, 0 <= r < d, d >= 1).
struct Grade {
    bool modular = false;
    std::int64_t value = 0;
    std::int64_t mod = 0;  // 0 for integer grades

    static Grade integer(std::int64_t z) { return Grade{false, z, 0}; }
    static Grade residue(std::int64_t r, std::int64_t d);

    friend bool operator==(const Grade& a, const Grade& b) {
        return a.modular == b.modular && a.value == b.value && a.mod == b.mod;
    }
    friend bool operator<(const Grade& a, const Grade& b) {
        if (a.modular != b.modular) return !a.modular;
        if (a.mod != b.mod) return a.mod < b.mod;
        return a.value < b.value;
    }

    std::string to_string() const;  // "@z" or "@r%d"
};

/// Graded variable x_id^grade. Variables with equal ids but distinct grades
/// are distinct.
struct GVar {
    int id;
    Grade grade;

    friend bool operator==(const GVar& a, const GVar& b) {
        return a.id == b.id && a.grade == b.grade;
    }
    friend bool operator<(const GVar& a, const GVar& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.grade < b.grade;
    }

    std::string to_string() const;  // "x1@2", "x2@1%2"
};

using Word = std::vector<GVar>;

/// The group the variables are graded by: Z, or Z_d for a fixed d.
struct GroupTag {
    bool modular;
    std::int64_t d;  // meaningful when modular

    friend bool operator==(GroupTag a, GroupTag b) {
        return a.modular == b.modular && (!a.modular || a.d == b.d);
    }
};

/// Noncommutative polynomial in graded variables: a finite sum of words with
/// nonzero rational coefficients, all variables sharing one group tag.
/// Canonical term order: word length, then lexicographic on variables.
class GradedPolynomial {
public:
    struct WordLess {
        bool operator()(const Word& a, const Word& b) const;
    };
    using TermMap = std::map<Word, Rational, WordLess>;

    GradedPolynomial() = default;  // zero

    static GradedPolynomial variable(int id, Grade g);
    static GradedPolynomial from_word(Word w, const Rational& c = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::optional<GroupTag> group() const;

    /// Sorted distinct variables occurring anywhere in the polynomial.
    std::vector<GVar> variables() const;

    /// Every word contains every variable of the polynomial exactly once.
    bool is_multilinear() const;

    /// Largest word length (0 for the zero polynomial).
    int degree() const;

    void add_term(Word w, const Rational& c);

    GradedPolynomial operator-() const;
    friend GradedPolynomial operator+(const GradedPolynomial&, const GradedPolynomial&);
    friend GradedPolynomial operator-(const GradedPolynomial&, const GradedPolynomial&);
    friend GradedPolynomial operator*(const GradedPolynomial&, const GradedPolynomial&);
    friend GradedPolynomial operator*(const Rational&, const GradedPolynomial&);
    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    TermMap terms_;
};

GradedPolynomial commutator(const GradedPolynomial& p, const GradedPolynomial& q);
GradedPolynomial anticommutator(const GradedPolynomial& p, const GradedPolynomial& q);

/// Left-normed: [p_1,...,p_n] = [[p_1,...,p_{n-1}], p_n], n >= 2.
GradedPolynomial commutator(std::span<const GradedPolynomial> args);

/// Parse error with the 0-based offset of the offending character.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t pos);
    std::size_t position;
};

/// Grammar (whitespace-insensitive between tokens):
///   poly   := '-'? term (('+'|'-') term)*
///   term   := (rat '*')? factor+
///   factor := var | '[' poly (',' poly)+ ']'
///   var    := 'x' NAT '@' INT ('%' NAT)?
///   rat    := INT ('/' NAT)?
/// Brackets expand left-normed. Mixing integer and residue grades (or two
/// moduli) is a parse error.
GradedPolynomial parse_poly(const std::string& text);

/// Canonical rendering; parse_poly(format(p)) == p.
std::string format(const GradedPolynomial& p);

/// Reduces every integer grade mod d (canonical residue). Distinct Z-variables
/// with equal ids and congruent grades collide into one Z_d-variable.
GradedPolynomial pi_d(const GradedPolynomial& p, std::int64_t d);

/// Scales every integer grade by d. Requires d != 0.
GradedPolynomial phi_d(const GradedPolynomial& p, std::int64_t d);

/// Inclusion of the dZ-graded polynomials into the Z-graded ones: the
/// identity on content, after checking every grade is divisible by d.
GradedPolynomial psi_d(const GradedPolynomial& p, std::int64_t d);

/// Substitutes homogeneous elements for the variables and multiplies out.
/// Every assigned element must be homogeneous of the variable's degree
/// (exactly for integer grades, mod d for residue grades); violations throw.
Element evaluate(const GradedPolynomial& p,
                 const std::map<GVar, Element>& assignment,
                 const FiniteModel& model);

/// A family of graded identities, enumerable up to a degree bound and a
/// symmetric grade window. The families:
///   canonical  - commutators with an even grade, anticommutators of two odd
///                grades;
///   v1         - triple commutators plus products of variables with grades
///                off the lattice <d> whose residue indices sum past k;
///   v2         - commutator/anticommutator pairs chosen by the parity type
///                of the canonical decomposition g = alpha*d + beta*c, plus
///                the same products;
///   scaled     - a base family pushed through grade scaling by d, together
///                with the single variables of grade outside <d>.
struct IdentityFamily {
    enum class Kind { canonical, v1, v2, scaled };
    Kind kind = Kind::canonical;
    std::int64_t a = 0, b = 0, c = 0, k = 0, d = 0;
    std::shared_ptr<const IdentityFamily> base;  // for scaled

    static IdentityFamily canonical();
    static IdentityFamily v1(std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t k);
    static IdentityFamily v2(std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t k);
    static IdentityFamily scaled(std::int64_t d, IdentityFamily base);
};

/// Bounded prefix of the family's instance stream, deterministic order.
std::vector<GradedPolynomial> gen_identities(const IdentityFamily& family,
                                             int degree_bound,
                                             std::int64_t grade_window);

/// Residue index of g in the canonical decomposition g = alpha*d + beta*c
/// with beta = g * c^{-1} mod d in {0,...,d-1} (requires gcd(c, d) = 1), and
/// the parity type (alpha + beta) mod 2 used by the v2 family.
std::int64_t residue_index(std::int64_t g, std::int64_t c, std::int64_t d);
int parity_type(std::int64_t g, std::int64_t c, std::int64_t d);

}  // namespace zgrass

#endif
