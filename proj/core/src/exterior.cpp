#include "zgrass/exterior.hpp"

#include <cctype>
#include <sstream>

namespace zgrass {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw error("empty rational literal");
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw error("malformed rational literal: '" + text + "'");
    }
}

Monomial Monomial::generator(int i) {
    if (i < 1 || i > max_rank)
        throw error("generator index " + std::to_string(i) + " out of range");
    return Monomial(std::uint64_t{1} << (i - 1));
}

Monomial Monomial::from_indices(std::span<const int> indices) {
    std::uint64_t bits = 0;
    for (int i : indices) {
        std::uint64_t bit = generator(i).bits();
        if (bits & bit) throw error("repeated generator index " + std::to_string(i));
        bits |= bit;
    }
    return Monomial(bits);
}

Monomial Monomial::from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
}

bool Monomial::contains(int i) const {
    if (i < 1 || i > max_rank) return false;
    return (bits_ >> (i - 1)) & 1;
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(length()));
    std::uint64_t b = bits_;
    while (b) {
        std::uint64_t low = b & -b;
        out.push_back(std::countr_zero(low) + 1);
        b ^= low;
    }
    return out;
}

int Monomial::max_index() const {
    if (bits_ == 0) return 0;
    return 64 - std::countl_zero(bits_);
}

std::optional<MonoProduct> mono_mul(Monomial a, Monomial b) {
    if ((a.bits() & b.bits()) != 0) return std::nullopt;
    // inversions: pairs (i in a, j in b) with i > j
    int inv = 0;
    std::uint64_t ab = a.bits();
    while (ab) {
        std::uint64_t low = ab & -ab;
        inv += std::popcount(b.bits() & (low - 1));
        ab ^= low;
    }
    return MonoProduct{(inv % 2 == 0) ? 1 : -1, Monomial::from_bits(a.bits() | b.bits())};
}

Element::Element(int rank) : rank_(rank) {
    if (rank < 0 || rank > Monomial::max_rank)
        throw error("rank " + std::to_string(rank) + " out of range [0, 64]");
}

Element Element::scalar(int rank, const Rational& c) {
    Element e(rank);
    e.add_term(Monomial::unit(), c);
    return e;
}

Element Element::monomial(int rank, Monomial w, const Rational& c) {
    Element e(rank);
    if (w.max_index() > rank)
        throw error("monomial uses generator beyond rank " + std::to_string(rank));
    e.add_term(w, c);
    return e;
}

Element Element::generator(int rank, int i) {
    return monomial(rank, Monomial::generator(i));
}

Rational Element::coeff(Monomial w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(Monomial w, const Rational& c) {
    if (zgrass::is_zero(c)) return;
    if (w.max_index() > rank_)
        throw error("monomial uses generator beyond rank " + std::to_string(rank_));
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (zgrass::is_zero(it->second)) terms_.erase(it);
    }
}

void Element::check_same_rank(const Element& other) const {
    if (rank_ != other.rank_)
        throw error("rank mismatch: " + std::to_string(rank_) + " vs " +
                    std::to_string(other.rank_));
}

Element Element::operator-() const {
    Element out(rank_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

Element& Element::operator+=(const Element& other) {
    check_same_rank(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

Element operator+(const Element& a, const Element& b) {
    Element out = a;
    out += b;
    return out;
}

Element operator-(const Element& a, const Element& b) {
    Element out = a;
    out += -b;
    return out;
}

Element operator*(const Element& a, const Element& b) {
    a.check_same_rank(b);
    Element out(a.rank());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            if (auto p = mono_mul(wa, wb)) {
                Rational c = ca * cb;
                if (p->sign < 0) c = -c;
                out.add_term(p->product, c);
            }
        }
    }
    return out;
}

Element& Element::operator*=(const Element& other) {
    *this = *this * other;
    return *this;
}

Element operator*(const Rational& c, const Element& a) {
    Element out(a.rank());
    if (is_zero(c)) return out;
    for (const auto& [w, cw] : a.terms()) out.add_term(w, c * cw);
    return out;
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Element commutator(std::span<const Element> args) {
    if (args.size() < 2) throw error("long commutator needs at least 2 arguments");
    Element acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) acc = commutator(acc, args[i]);
    return acc;
}

Element anticommutator(const Element& a, const Element& b) { return a * b + b * a; }

namespace {

std::string mono_string(Monomial w) {
    std::string s;
    for (int i : w.indices()) s += "e" + std::to_string(i);
    return s;
}

std::string term_string(Monomial w, const Rational& abs_coeff) {
    if (w.is_unit()) return to_string(abs_coeff);
    if (abs_coeff == 1) return mono_string(w);
    return to_string(abs_coeff) + "*" + mono_string(w);
}

}  // namespace

std::string format(const Element& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        bool neg = sgn(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_string(w, mag);
    }
    return out;
}

namespace {

// Hand-rolled scanner for the element text format.
class ElementParser {
public:
    ElementParser(const std::string& text, int rank) : text_(text), rank_(rank) {}

    Element run() {
        Element acc(rank_);
        skip_ws();
        bool neg = consume('-');
        acc += term(neg);
        skip_ws();
        while (pos_ < text_.size()) {
            char op = text_[pos_];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            acc += term(op == '-');
            skip_ws();
        }
        return acc;
    }

private:
    Element term(bool negate) {
        skip_ws();
        Rational coeff = 1;
        bool have_coeff = false;
        if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
            coeff = number();
            have_coeff = true;
            skip_ws();
            if (consume('/')) {
                skip_ws();
                Rational den = number();
                if (is_zero(den)) fail("zero denominator");
                coeff /= den;
                skip_ws();
            }
            if (consume('*')) skip_ws();
        }
        Element value = Element::scalar(rank_, negate ? Rational(-coeff) : coeff);
        bool have_mono = false;
        while (pos_ < text_.size() && text_[pos_] == 'e') {
            ++pos_;
            std::size_t at = pos_;
            long idx = integer();
            if (idx < 1 || idx > rank_)
                fail("generator index out of range at offset " + std::to_string(at));
            value = value * Element::generator(rank_, static_cast<int>(idx));
            have_mono = true;
        }
        if (!have_coeff && !have_mono) fail("expected a term");
        return value;
    }

    Rational number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected a number");
        return Rational(text_.substr(start, pos_ - start));
    }

    long integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected digits");
        return std::stol(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw error("element parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    const std::string& text_;
    int rank_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const std::string& text, int rank) {
    ElementParser p(text, rank);
    return p.run();
}

}  // namespace zgrass
