#ifndef BMOLL_PROPS_HPP
#define BMOLL_PROPS_HPP

#include <cstddef>

#include "bmoll/poly.hpp"

namespace bmoll {

/// Coefficients weakly rise then weakly fall. mode is the smallest index
/// attaining the maximum (deterministic on plateaus).
/// Throws empty_polynomial for the zero polynomial.
struct UnimodalResult {
    bool ok = false;
    std::size_t mode = 0;
};
UnimodalResult is_unimodal(const Poly& f);

/// f_n <= f_0 <= f_{n-1} <= f_1 <= ... <= f_{floor(n/2)}, weak throughout.
bool is_spiral(const Poly& f);

/// f_0 <= f_n <= f_1 <= f_{n-1} <= ... <= f_{floor((n+1)/2)}, weak throughout.
/// Dual to spiral under coefficient reversal.
bool is_alternatingly_increasing(const Poly& f);

/// Tests both sides of the equivalence "f alternatingly increasing iff both
/// symmetric-decomposition components are unimodal". The equivalence is
/// guaranteed when deg f = deg a = n, deg b = n-1 AND both components are
/// nonnegative (the chain f_0 <= f_n encodes b_0 >= 0, which unimodality of
/// b alone does not; f = 3+x has b = -2, unimodal, yet fails the chain).
/// Reports both sides verbatim either way.
/// Throws precondition_degree when the degree hypotheses fail.
struct EquivalencePair {
    bool alt_increasing = false;
    bool components_unimodal = false;
};
EquivalencePair alt_increasing_equivalence(const Poly& f);

} // namespace bmoll

#endif
