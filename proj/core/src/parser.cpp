#include <cctype>
#include <optional>
#include <vector>

#include "zgrass/freealg.hpp"

namespace zgrass {

parse_error::parse_error(const std::string& what, std::size_t pos)
    : error("parse error at offset " + std::to_string(pos) + ": " + what), position(pos) {}

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    GradedPolynomial run() {
        GradedPolynomial p = poly();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    GradedPolynomial poly() {
        skip_ws();
        bool neg = consume('-');
        GradedPolynomial acc = term(neg);
        skip_ws();
        while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            bool minus = s_[pos_] == '-';
            ++pos_;
            acc = acc + term(minus);
            skip_ws();
        }
        return acc;
    }

    GradedPolynomial term(bool negate) {
        skip_ws();
        Rational coeff = 1;
        if (peek_signed_number()) {
            coeff = rational();
            skip_ws();
            if (consume('*')) skip_ws();
        }
        if (negate) coeff = -coeff;
        std::optional<GradedPolynomial> acc;
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == 'x') {
                GradedPolynomial v = variable();
                acc = acc ? (*acc * v) : v;
            } else if (pos_ < s_.size() && s_[pos_] == '[') {
                GradedPolynomial br = bracket();
                acc = acc ? (*acc * br) : br;
            } else {
                break;
            }
        }
        if (!acc) fail("expected a variable or a bracket");
        return coeff * *acc;
    }

    GradedPolynomial bracket() {
        expect('[');
        std::vector<GradedPolynomial> items;
        items.push_back(poly());
        skip_ws();
        while (consume(',')) items.push_back(poly());
        skip_ws();
        expect(']');
        if (items.size() < 2) fail("a bracket needs at least two arguments");
        return commutator(std::span<const GradedPolynomial>(items));
    }

    // var := 'x' NAT '@' INT ('%' NAT)?   -- one token, no internal whitespace
    GradedPolynomial variable() {
        std::size_t start = pos_;
        expect('x');
        long id = digits("variable id");
        if (id < 1) throw parse_error("variable ids start at 1", start);
        expect('@');
        bool neg = consume('-');
        long z = digits("grade");
        if (neg) z = -z;
        Grade g = Grade::integer(z);
        if (consume('%')) {
            long mod = digits("modulus");
            if (mod < 1) throw parse_error("modulus must be at least 1", start);
            g = Grade::residue(z, mod);
        }
        GroupTag mine{g.modular, g.mod};
        if (tag_ && !(*tag_ == mine)) throw parse_error("mixed grading groups", start);
        tag_ = mine;
        return GradedPolynomial::variable(static_cast<int>(id), g);
    }

    Rational rational() {
        bool neg = consume('-');
        Rational num(digits("numerator"));
        skip_ws();
        if (consume('/')) {
            skip_ws();
            long den = digits("denominator");
            if (den == 0) fail("zero denominator");
            num /= den;
        }
        return neg ? Rational(-num) : num;
    }

    bool peek_signed_number() const {
        std::size_t p = pos_;
        if (p < s_.size() && s_[p] == '-') ++p;
        return p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]));
    }

    long digits(const char* what) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        try {
            return std::stol(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw parse_error("number out of range", start);
        }
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::optional<GroupTag> tag_;
};

}  // namespace

GradedPolynomial parse_poly(const std::string& text) { return PolyParser(text).run(); }

}  // namespace zgrass
