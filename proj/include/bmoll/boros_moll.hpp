#ifndef BMOLL_BOROS_MOLL_HPP
#define BMOLL_BOROS_MOLL_HPP

#include <vector>

#include "bmoll/poly.hpp"

namespace bmoll {

/// One row of the rational coefficient triangle: d[i] = d_i(m), the
/// coefficient of x^i in P_m(x). Entries are strictly positive and
/// 2^{2m} d_i(m) is an integer; both are asserted at construction.
struct DRow {
    unsigned long m = 0;
    std::vector<Rat> d;
};

/// One row of the integer triangle: c[i] = c_i(m), the coefficient of x^i
/// in Q_m(x) = 2^m m! x^m P_m(1/x). Entries are strictly positive.
struct CRow {
    unsigned long m = 0;
    std::vector<Int> c;
};

/// Rows 0..M of d_i(m) by the two-term recurrence
///   2(m+1) d_i(m+1) = 2(m+i) d_{i-1}(m) + (4m+2i+3) d_i(m)
/// from d_0(0)=1, out-of-range terms zero.
std::vector<DRow> d_rows_up_to(unsigned long M);
DRow d_row_recurrence(unsigned long m);

/// Single recurrence steps, row m -> row m+1; building blocks for the bulk
/// producers and for streaming sweeps that keep only one row in memory.
std::vector<Rat> d_row_next(const std::vector<Rat>& cur, unsigned long m);
std::vector<Int> c_row_next(const std::vector<Int>& cur, unsigned long m);
Poly q_ode_next(const Poly& q, unsigned long m);

/// Row m by the independent closed binomial sum
///   d_i(m) = 2^{-2m} sum_{k=i}^m 2^k C(2m-2k, m-k) C(m+k, k) C(k, i).
DRow d_row_closed(unsigned long m);

Poly p_poly(unsigned long m);

/// Rows 0..M of c_i(m) by the integer recurrence
///   c_i(m+1) = (4m-2i+2) c_i(m) + (6m-2i+5) c_{i-1}(m)
/// from c_0(0)=1. Deliberately never derived by scaling d rows, so the
/// integer route stays independent of the rational one.
std::vector<CRow> c_rows_up_to(unsigned long M);
CRow c_row(unsigned long m);

Poly q_poly(unsigned long m);

/// Q_m by iterating the differential recurrence
///   Q_{m+1} = (2m+1)(2+3x) Q_m - 2x(1+x) Q_m'
/// from Q_0 = 1; a third route equal to q_poly.
std::vector<Poly> q_polys_ode_up_to(unsigned long M);
Poly q_poly_ode(unsigned long m);

/// Closed values of Q_m at 0, 1, -1, computed from the formulas
/// (2m)!/m!,  m!/2^{m+1} C(4m+2, 2m+1),  (-1)^m (2m-1)!!
/// rather than by evaluating the polynomial.
struct QSpecialValues {
    Int at0;
    Rat at1;
    Int at_minus1;
};
QSpecialValues q_special_values(unsigned long m);

/// Floating-point cross-check of the quartic integral
///   int_0^inf dy / (1+2xy^2+y^4)^{m+1} = pi / (2^{m+3/2} (x+1)^{m+1/2}) P_m(x).
/// The left side is adaptive quadrature after the compactifying substitution
/// y = t/(1-t); the right side evaluates P_m exactly and converts to double.
struct IntegralCheck {
    double lhs = 0;
    double rhs = 0;
    bool ok = false;
};
IntegralCheck integral_check(unsigned long m, double x, double rel_tol);

} // namespace bmoll

#endif
