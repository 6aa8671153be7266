#ifndef BMOLL_SYMDECOMP_HPP
#define BMOLL_SYMDECOMP_HPP

#include <cstddef>

#include "bmoll/poly.hpp"

namespace bmoll {

/// The unique pair f = a + x*b with a symmetric about n/2 and b symmetric
/// about (n-1)/2, relative to the reference degree n of f.
struct SymDecomp {
    Poly a;
    Poly b;
    std::size_t n = 0;
};

/// a = (f - x^{n+1} f(1/x)) / (1-x),  b = (x^n f(1/x) - f) / (1-x).
/// Both quotients are computed independently and the recomposition
/// a + x*b == f is asserted, so an algebra slip fails loudly instead of
/// propagating. Throws degree_too_large when deg f > n.
SymDecomp decompose(const Poly& f, std::size_t n);

/// a + x*b.
Poly recompose(const SymDecomp& d);

} // namespace bmoll

#endif
