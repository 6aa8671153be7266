#include "bmoll/kernels.hpp"

namespace bmoll {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int double_factorial_odd(unsigned long m) {
    if (m == 0) return 1;
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), 2 * m - 1);
    return r;
}

Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Rat gen_binomial(const Rat& r, unsigned long k) {
    Rat acc(1);
    for (unsigned long j = 0; j < k; ++j) {
        acc *= r - Rat(static_cast<long>(j));
        acc /= Rat(static_cast<long>(j) + 1);
    }
    return acc;
}

} // namespace bmoll
