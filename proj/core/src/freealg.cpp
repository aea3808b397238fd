#include "zgrass/freealg.hpp"

#include <algorithm>
#include <set>

namespace zgrass {

Grade Grade::residue(std::int64_t r, std::int64_t d) {
    if (d < 1) throw error("modulus must be at least 1");
    return Grade{true, canonical_residue(r, d), d};
}

std::string Grade::to_string() const {
    if (modular) return std::to_string(value) + "%" + std::to_string(mod);
    return std::to_string(value);
}

std::string GVar::to_string() const { return "x" + std::to_string(id) + "@" + grade.to_string(); }

bool GradedPolynomial::WordLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

GradedPolynomial GradedPolynomial::variable(int id, Grade g) {
    if (id < 1) throw error("variable ids are positive");
    GradedPolynomial p;
    p.add_term(Word{GVar{id, g}}, 1);
    return p;
}

GradedPolynomial GradedPolynomial::from_word(Word w, const Rational& c) {
    GradedPolynomial p;
    p.add_term(std::move(w), c);
    return p;
}

std::optional<GroupTag> GradedPolynomial::group() const {
    for (const auto& [w, c] : terms_)
        for (const GVar& x : w)
            return GroupTag{x.grade.modular, x.grade.mod};
    return std::nullopt;
}

void GradedPolynomial::add_term(Word w, const Rational& c) {
    if (zgrass::is_zero(c)) return;
    std::optional<GroupTag> tag = group();
    for (const GVar& x : w) {
        GroupTag xt{x.grade.modular, x.grade.mod};
        if (!tag) tag = xt;
        else if (!(*tag == xt)) throw error("mixed grading groups in one polynomial");
    }
    auto [it, inserted] = terms_.emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (zgrass::is_zero(it->second)) terms_.erase(it);
    }
}

std::vector<GVar> GradedPolynomial::variables() const {
    std::set<GVar> seen;
    for (const auto& [w, c] : terms_)
        for (const GVar& x : w) seen.insert(x);
    return std::vector<GVar>(seen.begin(), seen.end());
}

bool GradedPolynomial::is_multilinear() const {
    if (terms_.empty()) return true;
    std::vector<GVar> vars = variables();
    for (const auto& [w, c] : terms_) {
        if (w.size() != vars.size()) return false;
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (!std::equal(sorted.begin(), sorted.end(), vars.begin())) return false;
    }
    return true;
}

int GradedPolynomial::degree() const {
    int deg = 0;
    for (const auto& [w, c] : terms_) deg = std::max(deg, static_cast<int>(w.size()));
    return deg;
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

GradedPolynomial operator+(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
}

GradedPolynomial operator-(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a + (-b);
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial out;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(std::move(w), ca * cb);
        }
    }
    return out;
}

GradedPolynomial operator*(const Rational& c, const GradedPolynomial& a) {
    GradedPolynomial out;
    if (is_zero(c)) return out;
    for (const auto& [w, cw] : a.terms_) out.add_term(w, c * cw);
    return out;
}

GradedPolynomial commutator(const GradedPolynomial& p, const GradedPolynomial& q) {
    return p * q - q * p;
}

GradedPolynomial anticommutator(const GradedPolynomial& p, const GradedPolynomial& q) {
    return p * q + q * p;
}

GradedPolynomial commutator(std::span<const GradedPolynomial> args) {
    if (args.size() < 2) throw error("long commutator needs at least 2 arguments");
    GradedPolynomial acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) acc = commutator(acc, args[i]);
    return acc;
}

std::string format(const GradedPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        bool neg = sgn(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + "*";
        bool first_var = true;
        for (const GVar& x : w) {
            if (!first_var) out += " ";
            out += x.to_string();
            first_var = false;
        }
    }
    return out;
}

GradedPolynomial pi_d(const GradedPolynomial& p, std::int64_t d) {
    if (d < 1) throw error("modulus must be at least 1");
    auto tag = p.group();
    if (tag && tag->modular) throw error("pi_d expects an integer-graded polynomial");
    GradedPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        Word mapped;
        mapped.reserve(w.size());
        for (const GVar& x : w)
            mapped.push_back(GVar{x.id, Grade::residue(x.grade.value, d)});
        out.add_term(std::move(mapped), c);
    }
    return out;
}

GradedPolynomial phi_d(const GradedPolynomial& p, std::int64_t d) {
    if (d == 0) throw error("scaling by zero is not invertible");
    auto tag = p.group();
    if (tag && tag->modular) throw error("phi_d expects an integer-graded polynomial");
    GradedPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        Word mapped;
        mapped.reserve(w.size());
        for (const GVar& x : w)
            mapped.push_back(GVar{x.id, Grade::integer(d * x.grade.value)});
        out.add_term(std::move(mapped), c);
    }
    return out;
}

GradedPolynomial psi_d(const GradedPolynomial& p, std::int64_t d) {
    if (d == 0) throw error("modulus must be nonzero");
    auto tag = p.group();
    if (tag && tag->modular) throw error("psi_d expects an integer-graded polynomial");
    for (const auto& [w, c] : p.terms())
        for (const GVar& x : w)
            if (x.grade.value % d != 0)
                throw error("grade " + std::to_string(x.grade.value) +
                            " is not a multiple of " + std::to_string(d));
    return p;
}

Element evaluate(const GradedPolynomial& p, const std::map<GVar, Element>& assignment,
                 const FiniteModel& model) {
    // admissibility: each assigned element homogeneous of the variable's degree
    for (const GVar& x : p.variables()) {
        auto it = assignment.find(x);
        if (it == assignment.end())
            throw error("no assignment for variable " + x.to_string());
        const Element& e = it->second;
        if (x.grade.modular) {
            std::int64_t d = x.grade.mod;
            for (const auto& [w, c] : e.terms()) {
                if (model.quotient_degree(w, d) != x.grade.value)
                    throw error("inadmissible substitution for " + x.to_string());
            }
        } else {
            Homogeneity h = model.homogeneity(e);
            if (h.kind == Homogeneity::Kind::not_homogeneous ||
                (h.kind == Homogeneity::Kind::degree && h.z != x.grade.value))
                throw error("inadmissible substitution for " + x.to_string());
        }
    }
    Element acc(model.rank());
    for (const auto& [w, c] : p.terms()) {
        Element prod = Element::scalar(model.rank(), c);
        for (const GVar& x : w) prod *= assignment.at(x);
        acc += prod;
    }
    return acc;
}

std::int64_t residue_index(std::int64_t g, std::int64_t c, std::int64_t d) {
    if (d < 1) throw error("modulus must be at least 1");
    if (gcd64(c, d) != 1) throw error("c must be invertible mod d");
    // beta = g * c^{-1} mod d by scanning (d is small here)
    std::int64_t cr = canonical_residue(c, d);
    std::int64_t gr = canonical_residue(g, d);
    for (std::int64_t beta = 0; beta < d; ++beta)
        if (canonical_residue(beta * cr, d) == gr) return beta;
    throw error("unreachable");
}

int parity_type(std::int64_t g, std::int64_t c, std::int64_t d) {
    std::int64_t beta = residue_index(g, c, d);
    std::int64_t alpha = (g - beta * c) / d;
    return static_cast<int>(canonical_residue(alpha + beta, 2));
}

IdentityFamily IdentityFamily::canonical() { return IdentityFamily{}; }

namespace {

void validate_blocks(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t k,
                     std::int64_t d, bool want_even_quotient) {
    if (a < 1 || b < 1) throw error("a and b must be positive");
    if (!(-b < c && c < a)) throw error("c must satisfy -b < c < a");
    if (gcd64(gcd64(a, b), c) != 1) throw error("a, b, c must be coprime as a triple");
    if (d < 2) throw error("needs gcd(a, b) > 1");
    if (k < d - 1) throw error("k must be at least gcd(a, b) - 1");
    bool even = ((a / d) % 2 == 0) || ((b / d) % 2 == 0);
    if (even != want_even_quotient)
        throw error(want_even_quotient ? "family needs (a/d)(b/d) even"
                                       : "family needs (a/d)(b/d) odd");
}

}  // namespace

IdentityFamily IdentityFamily::v1(std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::int64_t k) {
    std::int64_t d = gcd64(a, b);
    validate_blocks(a, b, c, k, d, true);
    IdentityFamily f;
    f.kind = Kind::v1;
    f.a = a; f.b = b; f.c = c; f.k = k; f.d = d;
    return f;
}

IdentityFamily IdentityFamily::v2(std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::int64_t k) {
    std::int64_t d = gcd64(a, b);
    validate_blocks(a, b, c, k, d, false);
    IdentityFamily f;
    f.kind = Kind::v2;
    f.a = a; f.b = b; f.c = c; f.k = k; f.d = d;
    return f;
}

IdentityFamily IdentityFamily::scaled(std::int64_t d, IdentityFamily base) {
    if (d < 2) throw error("scaling modulus must be at least 2");
    IdentityFamily f;
    f.kind = Kind::scaled;
    f.d = d;
    f.base = std::make_shared<IdentityFamily>(std::move(base));
    return f;
}

}  // namespace zgrass
