#include "eqidx/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace eqidx {

namespace {

void check_rank(int rank) {
    if (rank < 1 || rank > kMaxRank) {
        throw std::invalid_argument("rank must lie in [1, " + std::to_string(kMaxRank) +
                                    "], got " + std::to_string(rank));
    }
}

int add_exponents(int a, int b) {
#ifndef NDEBUG
    int out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("exponent overflow in Laurent multiplication");
    }
    return out;
#else
    return a + b;
#endif
}

Exponent add(const Exponent& a, const Exponent& b, int rank) {
    Exponent e;
    e.circle = add_exponents(a.circle, b.circle);
    for (int i = 0; i < rank; ++i) {
        e.torus[i] = add_exponents(a.torus[i], b.torus[i]);
    }
    return e;
}

// Sorts and merges equal exponents, dropping zero coefficients.
void canonicalize(std::vector<LaurentPoly::Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.exp < y.exp; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Integer c = terms[i].coeff;
        while (j < terms.size() && terms[j].exp == terms[i].exp) {
            c += terms[j].coeff;
            ++j;
        }
        if (c != 0) {
            terms[out].exp = terms[i].exp;
            terms[out].coeff = std::move(c);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

Complex int_power(Complex z, int e) {
    if (e == 0) return {1.0, 0.0};
    bool invert = e < 0;
    unsigned long long u = invert ? -static_cast<long long>(e) : e;
    Complex acc{1.0, 0.0};
    while (u != 0) {
        if (u & 1ULL) acc *= z;
        z *= z;
        u >>= 1;
    }
    return invert ? Complex{1.0, 0.0} / acc : acc;
}

}  // namespace

LaurentPoly::LaurentPoly(int rank) : rank_(rank) { check_rank(rank); }

LaurentPoly LaurentPoly::constant(int rank, const Integer& c) {
    return monomial(rank, Exponent{}, c);
}

LaurentPoly LaurentPoly::monomial(int rank, const Exponent& e, const Integer& c) {
    LaurentPoly p(rank);
    for (int i = rank; i < kMaxRank; ++i) {
        if (e.torus[i] != 0) {
            throw std::invalid_argument("exponent has nonzero slot beyond the rank");
        }
    }
    if (c != 0) p.terms_.push_back({e, c});
    return p;
}

LaurentPoly LaurentPoly::torus_var(int rank, int i, int power) {
    if (i < 1 || i > rank) {
        throw std::out_of_range("torus variable index " + std::to_string(i) +
                                " out of range for rank " + std::to_string(rank));
    }
    Exponent e;
    e.torus[i - 1] = power;
    return monomial(rank, e);
}

LaurentPoly LaurentPoly::circle_var(int rank, int power) {
    Exponent e;
    e.circle = power;
    return monomial(rank, e);
}

LaurentPoly LaurentPoly::from_terms(int rank, std::vector<Term> terms) {
    LaurentPoly p(rank);
    for (const auto& t : terms) {
        for (int i = rank; i < kMaxRank; ++i) {
            if (t.exp.torus[i] != 0) {
                throw std::invalid_argument("exponent has nonzero slot beyond the rank");
            }
        }
    }
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_torus_only() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.exp.circle == 0; });
}

int LaurentPoly::min_circle_degree() const {
    if (is_zero()) throw std::domain_error("circle degree of the zero polynomial");
    return terms_.front().exp.circle;
}

int LaurentPoly::max_circle_degree() const {
    if (is_zero()) throw std::domain_error("circle degree of the zero polynomial");
    return terms_.back().exp.circle;
}

LaurentPoly LaurentPoly::circle_coefficient(int b) const {
    LaurentPoly out(rank_);
    for (const auto& t : terms_) {
        if (t.exp.circle == b) {
            Term u = t;
            u.exp.circle = 0;
            out.terms_.push_back(std::move(u));
        }
    }
    return out;
}

LaurentPoly LaurentPoly::shift_circle(int b) const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.exp.circle = add_exponents(t.exp.circle, b);
    return out;
}

LaurentPoly LaurentPoly::embed(int new_rank) const {
    if (new_rank < rank_) {
        throw std::invalid_argument("embed cannot lower the rank");
    }
    check_rank(new_rank);
    LaurentPoly out = *this;
    out.rank_ = new_rank;
    return out;
}

Integer LaurentPoly::identity_value() const {
    Integer sum = 0;
    for (const auto& t : terms_) sum += t.coeff;
    return sum;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

void LaurentPoly::require_same_rank(const LaurentPoly& o) const {
    if (rank_ != o.rank_) {
        throw RankMismatch("rank mismatch: " + std::to_string(rank_) + " vs " +
                           std::to_string(o.rank_));
    }
}

LaurentPoly& LaurentPoly::add_scaled(const LaurentPoly& o, int sign) {
    require_same_rank(o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exp < a->exp) {
            merged.push_back({b->exp, sign > 0 ? b->coeff : Integer(-b->coeff)});
            ++b;
        } else {
            Integer c = sign > 0 ? Integer(a->coeff + b->coeff) : Integer(a->coeff - b->coeff);
            if (c != 0) merged.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return add_scaled(o, 1); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return add_scaled(o, -1); }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_rank(b);
    LaurentPoly out(a.rank_);
    if (a.is_zero() || b.is_zero()) return out;
    const int rank = a.rank_;
    // Multiplying by a monomial preserves the term order.
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const auto& mono = a.terms_.size() == 1 ? a.terms_.front() : b.terms_.front();
        const auto& other = a.terms_.size() == 1 ? b : a;
        out.terms_.reserve(other.terms_.size());
        for (const auto& t : other.terms_) {
            out.terms_.push_back({add(t.exp, mono.exp, rank), t.coeff * mono.coeff});
        }
        return out;
    }
    // One sorted shifted copy of the longer operand per term of the shorter,
    // merged pairwise.
    const auto& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const auto& large = a.terms_.size() <= b.terms_.size() ? b : a;
    std::vector<LaurentPoly> parts;
    parts.reserve(small.terms_.size());
    for (const auto& x : small.terms_) {
        LaurentPoly shifted(rank);
        shifted.terms_.reserve(large.terms_.size());
        for (const auto& y : large.terms_) shifted.terms_.push_back({add(x.exp, y.exp, rank), x.coeff * y.coeff});
        parts.push_back(std::move(shifted));
    }
    while (parts.size() > 1) {
        std::size_t half = 0;
        for (std::size_t i = 0; i < parts.size(); i += 2) {
            if (i + 1 < parts.size()) parts[i] += parts[i + 1];
            if (half != i) parts[half] = std::move(parts[i]);
            ++half;
        }
        parts.resize(half, LaurentPoly(rank));
    }
    return std::move(parts.front());
}

TorusPoint::TorusPoint(std::vector<Complex> c, std::optional<Complex> circ)
    : coords(std::move(c)), circle(circ) {
    auto check = [](Complex z) {
        if (!(std::abs(std::abs(z) - 1.0) <= 1e-12)) {
            throw std::invalid_argument("torus coordinate is not of unit modulus");
        }
    };
    if (coords.empty()) throw std::invalid_argument("torus point needs at least one coordinate");
    for (auto z : coords) check(z);
    if (circle) check(*circle);
}

LaurentPoly substitute_t(const LaurentPoly& p, int i) {
    if (i < 1 || i > p.rank()) {
        throw std::out_of_range("substitution index " + std::to_string(i) +
                                " out of range for rank " + std::to_string(p.rank()));
    }
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        LaurentPoly::Term u = t;
        u.exp.torus[i - 1] += u.exp.circle;
        u.exp.circle = 0;
        terms.push_back(std::move(u));
    }
    return LaurentPoly::from_terms(p.rank(), std::move(terms));
}

Complex eval_at(const LaurentPoly& p, const TorusPoint& pt) {
    if (pt.rank() != p.rank()) {
        throw RankMismatch("torus point rank does not match polynomial rank");
    }
    Complex sum{0.0, 0.0};
    for (const auto& t : p.terms()) {
        Complex v{t.coeff.get_d(), 0.0};
        for (int i = 0; i < p.rank(); ++i) {
            if (t.exp.torus[i] != 0) v *= int_power(pt.coords[i], t.exp.torus[i]);
        }
        if (t.exp.circle != 0) {
            if (!pt.circle) {
                throw std::invalid_argument("polynomial involves t but the point has no circle coordinate");
            }
            v *= int_power(*pt.circle, t.exp.circle);
        }
        sum += v;
    }
    return sum;
}

LaurentPoly elementary_symmetric(int rank, int i, int k) {
    if (i < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
    if (i == 0) return LaurentPoly::constant(rank, 1);
    LaurentPoly out(rank);
    if (i > rank) return out;
    // Iterate over the i-subsets of {0, ..., rank-1} in lexicographic order.
    std::vector<int> pick(i);
    for (int a = 0; a < i; ++a) pick[a] = a;
    std::vector<LaurentPoly::Term> terms;
    while (true) {
        Exponent e;
        for (int a : pick) e.torus[a] = k;
        terms.push_back({e, 1});
        int pos = i - 1;
        while (pos >= 0 && pick[pos] == rank - i + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int a = pos + 1; a < i; ++a) pick[a] = pick[a - 1] + 1;
    }
    return LaurentPoly::from_terms(rank, std::move(terms));
}

LaurentPoly lambda_poly(int n, int k) {
    if (n < 0) throw std::invalid_argument("lambda_poly: n must be nonnegative");
    const int rank = n + 1;
    LaurentPoly out = LaurentPoly::constant(rank, 1);
    for (int j = 1; j <= rank; ++j) {
        Exponent e;
        e.torus[j - 1] = k;
        e.circle = 1;
        out *= LaurentPoly::constant(rank, 1) - LaurentPoly::monomial(rank, e);
    }
    return out;
}

LaurentPoly torus_product(int rank, int k) {
    Exponent e;
    for (int j = 0; j < rank; ++j) e.torus[j] = k;
    return LaurentPoly::monomial(rank, e);
}

Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json torus = Json::array();
        for (int i = 0; i < p.rank(); ++i) torus.push_back(t.exp.torus[i]);
        terms.push_back(Json{{"coeff", t.coeff.get_str()}, {"t", t.exp.circle}, {"torus", std::move(torus)}});
    }
    return Json{{"rank", p.rank()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
    const int rank = j.at("rank").get<int>();
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
        LaurentPoly::Term term;
        const auto& torus = t.at("torus");
        if (static_cast<int>(torus.size()) != rank) {
            throw std::invalid_argument("term torus exponent length does not match rank");
        }
        for (int i = 0; i < rank; ++i) term.exp.torus[i] = torus[i].get<int>();
        term.exp.circle = t.at("t").get<int>();
        if (term.coeff.set_str(t.at("coeff").get<std::string>(), 10) != 0) {
            throw std::invalid_argument("coefficient is not a decimal integer");
        }
        terms.push_back(std::move(term));
    }
    return LaurentPoly::from_terms(rank, std::move(terms));
}

}  // namespace eqidx

namespace eqidx {

namespace {

// Multiplies by the monomial that moves every variable's minimum exponent to 0.
LaurentPoly shift_to_polynomial(const LaurentPoly& p, Exponent& shift) {
    shift = Exponent{};
    if (p.is_zero()) return p;
    shift = p.terms().front().exp;
    for (const auto& t : p.terms()) {
        shift.circle = std::min(shift.circle, t.exp.circle);
        for (int i = 0; i < p.rank(); ++i) shift.torus[i] = std::min(shift.torus[i], t.exp.torus[i]);
    }
    Exponent neg;
    neg.circle = -shift.circle;
    for (int i = 0; i < p.rank(); ++i) neg.torus[i] = -shift.torus[i];
    return p * LaurentPoly::monomial(p.rank(), neg);
}

bool divides(const Exponent& d, const Exponent& e, int rank) {
    if (d.circle > e.circle) return false;
    for (int i = 0; i < rank; ++i) {
        if (d.torus[i] > e.torus[i]) return false;
    }
    return true;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.rank() != den.rank()) throw RankMismatch("divide_exact rank mismatch");
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    const int rank = num.rank();
    if (num.is_zero()) return LaurentPoly(rank);
    Exponent num_shift, den_shift;
    LaurentPoly rest = shift_to_polynomial(num, num_shift);
    const LaurentPoly divisor = shift_to_polynomial(den, den_shift);
    const auto& lead = divisor.terms().back();
    std::vector<LaurentPoly::Term> quotient;
    // The divisor has no monomial factor, so the Laurent quotient exists iff
    // the polynomial quotient does; a single divisor is its own Groebner basis.
    while (!rest.is_zero()) {
        const auto& top = rest.terms().back();
        if (!divides(lead.exp, top.exp, rank) || !mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
            return std::nullopt;
        }
        Exponent e;
        e.circle = top.exp.circle - lead.exp.circle;
        for (int i = 0; i < rank; ++i) e.torus[i] = top.exp.torus[i] - lead.exp.torus[i];
        Integer c = top.coeff / lead.coeff;
        const LaurentPoly q = LaurentPoly::monomial(rank, e, c);
        rest -= q * divisor;
        quotient.push_back({e, std::move(c)});
    }
    Exponent back;
    back.circle = num_shift.circle - den_shift.circle;
    for (int i = 0; i < rank; ++i) back.torus[i] = num_shift.torus[i] - den_shift.torus[i];
    return LaurentPoly::from_terms(rank, std::move(quotient)) * LaurentPoly::monomial(rank, back);
}

}  // namespace eqidx
