#include "bmoll/props.hpp"

#include "bmoll/error.hpp"
#include "bmoll/symdecomp.hpp"

namespace bmoll {

namespace {

void require_nonzero(const Poly& f, const char* who) {
    if (f.is_zero()) throw empty_polynomial(std::string(who) + ": zero polynomial");
}

} // namespace

UnimodalResult is_unimodal(const Poly& f) {
    require_nonzero(f, "is_unimodal");
    const auto& c = f.coeffs();
    std::size_t i = 0;
    while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
    while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
    UnimodalResult res;
    res.ok = (i + 1 == c.size());
    std::size_t best = 0;
    for (std::size_t j = 1; j < c.size(); ++j) {
        if (c[j] > c[best]) best = j;
    }
    res.mode = best;
    return res;
}

bool is_spiral(const Poly& f) {
    require_nonzero(f, "is_spiral");
    const long n = f.degree();
    // interleave from the ends: n, 0, n-1, 1, ... down to floor(n/2)
    Rat prev = f.coeff(n);
    long lo = 0, hi = n - 1;
    bool take_lo = true;
    while (lo <= hi) {
        const Rat cur = take_lo ? f.coeff(lo++) : f.coeff(hi--);
        if (prev > cur) return false;
        prev = cur;
        take_lo = !take_lo;
    }
    return true;
}

bool is_alternatingly_increasing(const Poly& f) {
    require_nonzero(f, "is_alternatingly_increasing");
    const long n = f.degree();
    // interleave: 0, n, 1, n-1, ... up to floor((n+1)/2)
    Rat prev = f.coeff(0);
    long lo = 1, hi = n;
    bool take_hi = true;
    while (lo <= hi) {
        const Rat cur = take_hi ? f.coeff(hi--) : f.coeff(lo++);
        if (prev > cur) return false;
        prev = cur;
        take_hi = !take_hi;
    }
    return true;
}

EquivalencePair alt_increasing_equivalence(const Poly& f) {
    require_nonzero(f, "alt_increasing_equivalence");
    const long n = f.degree();
    SymDecomp d = decompose(f, static_cast<std::size_t>(n));
    if (d.a.degree() != n || d.b.degree() != n - 1) {
        throw precondition_degree(
            "alt_increasing_equivalence: requires deg a = n and deg b = n-1, got deg a = " +
            std::to_string(d.a.degree()) + ", deg b = " + std::to_string(d.b.degree()) +
            " at n = " + std::to_string(n));
    }
    EquivalencePair pair;
    pair.alt_increasing = is_alternatingly_increasing(f);
    pair.components_unimodal = is_unimodal(d.a).ok && is_unimodal(d.b).ok;
    return pair;
}

} // namespace bmoll
