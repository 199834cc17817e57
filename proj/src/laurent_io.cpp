#include <cctype>
#include <charconv>
#include <string>

#include "eqidx/laurent.hpp"

namespace eqidx {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, int rank) : text_(text), rank_(rank) {}

    LaurentPoly run() {
        std::vector<LaurentPoly::Term> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = take() == '-' ? -1 : 1;
            skip_ws();
        }
        terms.push_back(term(sign));
        skip_ws();
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            take();
            skip_ws();
            terms.push_back(term(c == '-' ? -1 : 1));
            skip_ws();
        }
        return LaurentPoly::from_terms(rank_, std::move(terms));
    }

private:
    std::string_view text_;
    int rank_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    int small_int(std::string_view d, std::size_t start) const {
        int value = 0;
        auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
        if (ec != std::errc() || ptr != d.data() + d.size()) {
            throw ParseError("integer out of range", start);
        }
        return value;
    }

    LaurentPoly::Term term(int sign) {
        LaurentPoly::Term t{Exponent{}, sign};
        factor(t);
        skip_ws();
        while (!at_end() && peek() == '*') {
            take();
            skip_ws();
            factor(t);
            skip_ws();
        }
        return t;
    }

    void factor(LaurentPoly::Term& t) {
        if (at_end()) fail("expected a coefficient or variable");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string s(digits());
            t.coeff *= Integer(s, 10);
            return;
        }
        if (peek() != 't') fail("expected a coefficient or variable");
        const std::size_t var_pos = pos_;
        take();
        int index = 0;  // 0 is the circle variable
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            index = small_int(digits(), var_pos + 1);
            if (index < 1 || index > rank_) {
                throw ParseError("variable t" + std::to_string(index) + " exceeds rank " +
                                     std::to_string(rank_),
                                 var_pos);
            }
        }
        skip_ws();
        int power = 1;
        if (!at_end() && peek() == '^') {
            take();
            skip_ws();
            int s = 1;
            if (!at_end() && (peek() == '-' || peek() == '+')) s = take() == '-' ? -1 : 1;
            const std::size_t start = pos_;
            power = s * small_int(digits(), start);
        }
        if (index == 0) {
            t.exp.circle += power;
        } else {
            t.exp.torus[index - 1] += power;
        }
    }
};

void append_monomial(std::string& out, const Exponent& e, int rank) {
    bool first = true;
    auto var = [&](const std::string& name, int power) {
        if (power == 0) return;
        if (!first) out += '*';
        first = false;
        out += name;
        if (power != 1) out += '^' + std::to_string(power);
    };
    for (int i = 0; i < rank; ++i) var("t" + std::to_string(i + 1), e.torus[i]);
    var("t", e.circle);
}

}  // namespace

LaurentPoly parse(std::string_view text, int rank) { return Parser(text, rank).run(); }

std::string format(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Integer magnitude = abs(t.coeff);
        const bool unit_monomial = t.exp == Exponent{};
        if (unit_monomial) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1) out += magnitude.get_str() + '*';
        append_monomial(out, t.exp, p.rank());
    }
    return out;
}

}  // namespace eqidx
