#include "bmoll/symdecomp.hpp"

#include "bmoll/error.hpp"

namespace bmoll {

SymDecomp decompose(const Poly& f, std::size_t n) {
    if (f.degree() > static_cast<long>(n)) {
        throw degree_too_large("decompose: deg f = " + std::to_string(f.degree()) +
                               " exceeds reference degree " + std::to_string(n));
    }
    SymDecomp d;
    d.n = n;
    d.a = div_exact_one_minus_x(f - reverse(f, n + 1));
    d.b = div_exact_one_minus_x(reverse(f, n) - f);

    if (recompose(d) != f) {
        throw internal_error("decompose: a + x*b does not reproduce f");
    }
    if (!is_symmetric(d.a, n)) {
        throw internal_error("decompose: a component not symmetric about n/2");
    }
    if (n > 0 && !is_symmetric(d.b, n - 1)) {
        throw internal_error("decompose: b component not symmetric about (n-1)/2");
    }
    // n = 0 forces b = 0; its symmetry check is vacuous.
    if (n == 0 && !d.b.is_zero()) {
        throw internal_error("decompose: nonzero b component at n = 0");
    }
    return d;
}

Poly recompose(const SymDecomp& d) { return d.a + d.b.times_x(); }

} // namespace bmoll
