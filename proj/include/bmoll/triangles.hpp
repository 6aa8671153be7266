#ifndef BMOLL_TRIANGLES_HPP
#define BMOLL_TRIANGLES_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bmoll/gamma.hpp"
#include "bmoll/poly.hpp"

namespace bmoll {

inline std::size_t alpha_row_len(unsigned long m) { return m / 2 + 1; }
inline std::size_t beta_row_len(unsigned long m) { return m == 0 ? 0 : (m - 1) / 2 + 1; }

/// Gamma rows of the symmetric decomposition (a_m, b_m) of Q_m, stored with
/// their true alternating signs: alpha[m][k] is the coefficient of
/// x^k (1+x)^{m-2k} in a_m, beta[m][k] of x^k (1+x)^{m-1-2k} in b_m.
/// Row lengths are fixed (floor(m/2)+1 and floor((m-1)/2)+1, the latter empty
/// at m = 0) and the strict sign law (-1)^k entry > 0 holds for m >= 1;
/// both are enforced at construction.
struct AlphaBetaTriangle {
    std::vector<std::vector<Int>> alpha;
    std::vector<std::vector<Int>> beta;

    unsigned long max_m() const { return alpha.empty() ? 0 : alpha.size() - 1; }
};

/// Streams rows 0..M of the parity-split recurrences without materializing
/// the triangle; the callback sees each row exactly once, in order.
/// For m = 2t even:
///   alpha_{m+1,k} = 2(2m+1-k) alpha_{m,k} - (4k-1) beta_{m,k-1}   1 <= k <= t
///   beta_{m+1,k}  = (1+4k) alpha_{m,k} + (4m+2k+3) beta_{m,k}     0 <= k <= t-1
///   alpha_{m+1,0} = 2(2m+1) alpha_{m,0},  beta_{m+1,t} = (1+4t) alpha_{m,t}
/// For m = 2t+1 odd:
///   alpha rows as above for 1 <= k <= t, plus alpha_{m+1,t+1} = -(3+4t) beta_{m,t}
///   beta_{m+1,k}  = (1+4k) alpha_{m,k} + (4m+2k+3) beta_{m,k}     0 <= k <= t
/// seeded by alpha_{0,0} = 1 and an empty beta row (beta_{m,-1} = 0).
using TriangleRowFn =
    std::function<void(unsigned long m, const std::vector<Int>& alpha, const std::vector<Int>& beta)>;
void for_each_triangle_row(unsigned long M, const TriangleRowFn& fn);

/// Single step, row m -> row m+1.
struct TriangleRow {
    std::vector<Int> alpha;
    std::vector<Int> beta;
};
TriangleRow triangle_row_next(const TriangleRow& cur, unsigned long m);

/// Row m alone, streamed in O(row) memory.
TriangleRow triangle_row(unsigned long m);

AlphaBetaTriangle build_triangle(unsigned long M);

/// Pairs (alpha_m(x), beta_m(x)) of the signed polynomials, iterated from
/// (1, 0) by the coupled first-order system
///   alpha_{m+1} = (4m+2) alpha_m - 2x alpha_m' + 3x beta_m + 4x^2 beta_m'
///   beta_{m+1}  = alpha_m + 4x alpha_m' + (4m+3) beta_m + 2x beta_m'.
/// Coefficient k of alpha_m(x) equals (-1)^k alpha[m][k] of the triangle.
std::vector<std::pair<Poly, Poly>> signed_sequence(unsigned long M);
std::pair<Poly, Poly> signed_pair_next(const std::pair<Poly, Poly>& cur, unsigned long m);

/// Independent oracle for the triangle: decompose Q_m and extract both
/// gamma vectors directly (beta side empty at m = 0).
std::pair<GammaVector, GammaVector> gamma_via_decomposition(unsigned long m);

/// Exact polynomial-identity check of the first-order recurrences satisfied
/// by the decomposition components,
///   (1-x) a_{m+1} = -2(1+x)((m+1)x - (2m+1)) a_m - 2x(1+x)^2 a_m'
///                   + x((4m-1)x - 3) b_m - 4x^2(1+x) b_m'
///   (x-1) b_{m+1} = ((4m+1)x - 1) a_m - 4x(1+x) a_m'
///                   + ((6m+1)x - (4m+3))(x+1) b_m - 2x(1+x)^2 b_m'
/// plus the reversal recurrence for R_m = x^m Q_m(1/x),
///   R_{m+1} = ((2m+2)x + 4m+3) R_m + 2x(1+x) R_m'.
/// Both sides are compared as displayed (multiplied out, no division).
/// Returns false and fills *diag on the first mismatch.
bool check_component_recurrences(unsigned long m, std::string* diag = nullptr);

/// Same identities on caller-supplied data; lets a sweep over m reuse
/// decompositions instead of rebuilding them per step.
struct ComponentPair {
    Poly a;
    Poly b;
};
bool component_recurrences_hold(unsigned long m, const ComponentPair& cur, const ComponentPair& nxt,
                                const Poly& rev_cur, const Poly& rev_next,
                                std::string* diag = nullptr);

/// Rebuild P_m from triangle row m: (a_m + b_m) / (2^m m!), with both
/// components expanded from their gamma rows. Must equal p_poly(m).
Poly p_from_gamma_rows(unsigned long m);

} // namespace bmoll

#endif
