#ifndef BMOLL_GAMMA_HPP
#define BMOLL_GAMMA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bmoll/poly.hpp"

namespace bmoll {

/// Expansion coefficients of a symmetric polynomial in the basis
/// x^k (1+x)^{n-2k}: f = sum_k gammas[k] x^k (1+x)^{n-2k}.
/// Length is floor(n/2)+1 with trailing zeros retained, so index k always
/// means the same basis element. An empty vector stands for the zero
/// polynomial with no center (the b component of a degree-0 decomposition).
struct GammaVector {
    std::vector<Rat> gammas;
    std::size_t n = 0;

    bool empty() const { return gammas.empty(); }
};

enum class GammaClass { GammaPositive, AlternatinglyGammaPositive, Neither, Both };

std::string to_string(GammaClass c);

/// True for AlternatinglyGammaPositive and for Both (which subsumes it).
bool is_alternatingly_gamma_positive(GammaClass c);

/// Unique expansion of a symmetric f (center n/2) in the x^k (1+x)^{n-2k}
/// basis, by iterative peeling: gamma_k is the x^k coefficient of the
/// running remainder. Throws not_symmetric when the precondition fails and
/// internal_residue if peeling leaves a nonzero remainder.
GammaVector gamma_vector(const Poly& f, std::size_t n);

/// Convenience for integer gamma rows.
GammaVector gamma_from_ints(const std::vector<Int>& row, std::size_t n);

/// sum_k gammas[k] x^k (1+x)^{n-2k}.
Poly from_gamma(const GammaVector& gv);

/// Sign-pattern classification. Non-strict (default) admits zeros on either
/// pattern; strict requires nonzero entries of the right sign up to the last
/// nonzero index (trailing zeros stay admissible).
GammaClass classify(const GammaVector& gv, bool strict = false);

/// Polynomial with coefficient k equal to (-1)^k gamma_k.
Poly signed_poly(const GammaVector& gv);

} // namespace bmoll

#endif
