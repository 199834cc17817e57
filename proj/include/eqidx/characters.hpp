#pragma once

// Equivariant Euler characteristics chi_{n,l} = sum_q (-1)^q H^q(CP^n, O(l))
// as characters of T^{n+1}, and the per-degree cohomology characters.

#include <map>
#include <shared_mutex>
#include <utility>

#include "eqidx/laurent.hpp"

namespace eqidx {

/// Memoized closed-form characters.  Safe for concurrent use.
class CharacterTable {
public:
    explicit CharacterTable(bool caching = true) : caching_(caching) {}

    /// chi_{n,l}, a polynomial of rank n+1.  For n = 0 this is t1^{-l}.
    LaurentPoly chi(int n, int l);

    std::size_t cached_entries() const;

private:
    bool caching_;
    mutable std::shared_mutex mutex_;
    std::map<std::pair<int, int>, LaurentPoly> memo_;
};

/// Process-wide table used by the free functions below.
CharacterTable& default_character_table();

/// chi_{n,l} from the three-case closed form.
LaurentPoly chi(int n, int l);

/// chi_{n,l} built only from chi_{0,l} = t1^{-l} and the shift relations in
/// n.  Shares no code with chi(); used as its oracle.  Requires n >= 0.
LaurentPoly chi_via_shift(int n, int l);

/// Character of H^q(CP^n, O(m)) for n >= 1, 0 <= q <= n.
LaurentPoly cohomology_character(int n, int q, int m);

/// dim H^q(CP^n, O(m)).
Integer dimension(int n, int q, int m);

/// Calls visit(r) for every r in Z_{>=0}^{parts} with |r| = total, in
/// stars-and-bars order.  Iterative.
template <class Visit>
void for_each_composition(int parts, int total, Visit&& visit) {
    if (total < 0 || parts < 1) return;
    std::vector<int> r(parts, 0);
    r[parts - 1] = total;
    while (true) {
        visit(static_cast<const std::vector<int>&>(r));
        // Rightmost slot j (excluding the last) with mass to its right.
        int suffix = r[parts - 1];
        int j = parts - 2;
        while (j >= 0 && suffix == 0) {
            suffix += r[j];
            --j;
        }
        if (j < 0) return;
        ++r[j];
        for (int i = j + 1; i < parts; ++i) r[i] = 0;
        r[parts - 1] = suffix - 1;
    }
}

}  // namespace eqidx
