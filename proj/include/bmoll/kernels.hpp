#ifndef BMOLL_KERNELS_HPP
#define BMOLL_KERNELS_HPP

#include "bmoll/numeric.hpp"

namespace bmoll {

/// n!
Int factorial(unsigned long n);

/// (2m-1)!! = 1*3*...*(2m-1); empty product 1 for m = 0.
Int double_factorial_odd(unsigned long m);

/// Binomial coefficient; 0 outside 0 <= k <= n so recurrence code can
/// index past row ends without special cases.
Int binomial(unsigned long n, long k);

/// Generalized binomial r(r-1)...(r-k+1)/k! for rational r.
Rat gen_binomial(const Rat& r, unsigned long k);

} // namespace bmoll

#endif
