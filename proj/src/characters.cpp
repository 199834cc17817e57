#include "eqidx/characters.hpp"

#include <mutex>
#include <stdexcept>

namespace eqidx {

namespace {

// sum over |r| = total of prod_j t_j^{sign * r_j}, rank = parts.
LaurentPoly symmetric_power_character(int rank, int total, int sign) {
    std::vector<LaurentPoly::Term> terms;
    for_each_composition(rank, total, [&](const std::vector<int>& r) {
        Exponent e;
        for (int j = 0; j < rank; ++j) e.torus[j] = sign * r[j];
        terms.push_back({e, 1});
    });
    return LaurentPoly::from_terms(rank, std::move(terms));
}

LaurentPoly closed_form_chi(int n, int l) {
    if (n < 0) throw std::invalid_argument("chi: n must be nonnegative");
    const int rank = n + 1;
    if (n == 0) return LaurentPoly::torus_var(1, 1, -l);
    if (l >= 0) return symmetric_power_character(rank, l, -1);
    if (l > -n - 1) return LaurentPoly(rank);
    LaurentPoly top = torus_product(rank, 1) * symmetric_power_character(rank, -l - n - 1, 1);
    return n % 2 == 0 ? top : -top;
}

}  // namespace

LaurentPoly CharacterTable::chi(int n, int l) {
    if (!caching_) return closed_form_chi(n, l);
    const auto key = std::make_pair(n, l);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    LaurentPoly value = closed_form_chi(n, l);
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(key, std::move(value)).first->second;
}

std::size_t CharacterTable::cached_entries() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

CharacterTable& default_character_table() {
    static CharacterTable table;
    return table;
}

LaurentPoly chi(int n, int l) { return default_character_table().chi(n, l); }

namespace {

class ShiftOracle {
public:
    const LaurentPoly& get(int n, int l) {
        const auto key = std::make_pair(n, l);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LaurentPoly value = compute(n, l);
        return memo_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::map<std::pair<int, int>, LaurentPoly> memo_;

    LaurentPoly lower(int n, int l) { return get(n - 1, l).embed(n + 1); }

    LaurentPoly compute(int n, int l) {
        if (n == 0) return LaurentPoly::torus_var(1, 1, -l);
        const int rank = n + 1;
        LaurentPoly out(rank);
        if (l >= 0) {
            // chi_{n,l} = sum_{i=0}^{l} chi_{n-1,l-i} t_{n+1}^{-i}
            for (int i = 0; i <= l; ++i) {
                out += lower(n, l - i) * LaurentPoly::torus_var(rank, rank, -i);
            }
        } else if (l == -1) {
            // chi_{n,0} = chi_{n-1,0} + chi_{n,-1} t_{n+1}^{-1}
            out = (get(n, 0) - lower(n, 0)) * LaurentPoly::torus_var(rank, rank, 1);
        } else {
            // chi_{n,l} = -sum_{i=1}^{-l-1} chi_{n-1,l+i} t_{n+1}^{i}
            for (int i = 1; i <= -l - 1; ++i) {
                out -= lower(n, l + i) * LaurentPoly::torus_var(rank, rank, i);
            }
        }
        return out;
    }
};

}  // namespace

LaurentPoly chi_via_shift(int n, int l) {
    if (n < 0) throw std::invalid_argument("chi_via_shift: n must be nonnegative");
    ShiftOracle oracle;
    return oracle.get(n, l);
}

LaurentPoly cohomology_character(int n, int q, int m) {
    if (n < 1) throw std::invalid_argument("cohomology_character: n must be at least 1");
    if (q < 0 || q > n) throw std::out_of_range("cohomology degree q must lie in [0, n]");
    const int rank = n + 1;
    if (q == 0) {
        // H^0 = S^m((C^{n+1})^*)
        return m >= 0 ? symmetric_power_character(rank, m, -1) : LaurentPoly(rank);
    }
    if (q < n) return LaurentPoly(rank);
    // H^n = Lambda^{n+1} C^{n+1} (x) S^{-m-n-1} C^{n+1}
    if (m > -n - 1) return LaurentPoly(rank);
    return torus_product(rank, 1) * symmetric_power_character(rank, -m - n - 1, 1);
}

Integer dimension(int n, int q, int m) {
    if (n < 1) throw std::invalid_argument("dimension: n must be at least 1");
    if (q < 0 || q > n) throw std::out_of_range("cohomology degree q must lie in [0, n]");
    Integer out = 0;
    if (q == 0 && m >= 0) {
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m + n), static_cast<unsigned long>(n));
    } else if (q == n && m <= -n - 1) {
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(-m - 1), static_cast<unsigned long>(n));
    }
    return out;
}

}  // namespace eqidx
