// Recursive-descent parser for the polynomial input language.
//
//   expr    := [+|-] product { (+|-) product }
//   product := power { [*] power }
//   power   := primary { ^ posint }
//   primary := integer | T<1-9> | ( expr ) | [ expr , expr ]
#include <algorithm>
#include <cctype>

#include "blowup/ncpoly.hpp"

namespace blowup {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 16;
constexpr std::size_t kMaxVars = 9;

class Parser {
public:
    Parser(std::string_view text, Field field) : text_(text), field_(std::move(field)) {}

    NcPoly parse() {
        NcPoly f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        // Widen everything to the largest variable index seen.
        return NcPoly(field_, std::max<std::size_t>(max_var_, 1), f.terms());
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    static bool starts_primary(char c) {
        return c == 'T' || c == '(' || c == '[' || std::isdigit(static_cast<unsigned char>(c));
    }

    NcPoly zero() const { return NcPoly(field_, kMaxVars); }

    NcPoly expr() {
        NcPoly acc = zero();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        NcPoly first = product();
        acc = negate ? -first : first;
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            NcPoly next = product();
            acc = c == '+' ? acc + next : acc - next;
        }
        return acc;
    }

    NcPoly product() {
        NcPoly acc = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (starts_primary(c)) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    NcPoly power() {
        NcPoly base = primary();
        while (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            std::uint64_t e = integer();
            if (e == 0) throw ParseError("exponent must be positive", at);
            if (e > kMaxExponent) throw ParseError("exponent too large", at);
            base = base.pow(e);
        }
        return base;
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (std::uint64_t{1} << 58)) fail("integer literal too large");
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        }
        return v;
    }

    NcPoly primary() {
        const char c = peek();
        const std::size_t at = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = integer();
            return NcPoly::constant(field_, kMaxVars,
                                    field_->from_int(static_cast<std::int64_t>(v % field_->p())));
        }
        if (c == 'T') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected variable index after 'T'", pos_);
            std::uint64_t idx = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = idx * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
                if (idx > kMaxVars) throw ParseError("variable index exceeds 9", at);
            }
            if (idx == 0) throw ParseError("variables are numbered from T1", at);
            max_var_ = std::max<std::size_t>(max_var_, idx);
            return NcPoly::variable(field_, kMaxVars, static_cast<std::uint8_t>(idx));
        }
        if (c == '(') {
            ++pos_;
            NcPoly inner = expr();
            expect(')');
            return inner;
        }
        if (c == '[') {
            ++pos_;
            NcPoly a = expr();
            expect(',');
            NcPoly b = expr();
            expect(']');
            return commutator(a, b);
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    Field field_;
    std::size_t pos_ = 0;
    std::size_t max_var_ = 0;
};

}  // namespace

NcPoly ncpoly_parse(std::string_view text, Field field) {
    if (!field) throw std::invalid_argument("ncpoly_parse: null field");
    return Parser(text, std::move(field)).parse();
}

}  // namespace blowup
