#include "bmoll/boros_moll.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "bmoll/error.hpp"
#include "bmoll/kernels.hpp"

namespace bmoll {

namespace {

void check_d_row(const DRow& row) {
    const Int bound = int_pow2(2 * row.m);
    for (const Rat& v : row.d) {
        if (v.sign() <= 0) {
            throw internal_error("d row " + std::to_string(row.m) + " has a non-positive entry");
        }
        // denominator must divide 2^{2m}
        if (!(v * Rat(bound)).is_integer()) {
            throw internal_error("d row " + std::to_string(row.m) +
                                 " entry " + v.str_frac() + " not dyadic of order 2m");
        }
    }
}

void check_c_row(const CRow& row) {
    for (const Int& v : row.c) {
        if (sgn(v) <= 0) {
            throw internal_error("c row " + std::to_string(row.m) + " has a non-positive entry");
        }
    }
}

} // namespace

std::vector<Rat> d_row_next(const std::vector<Rat>& cur, unsigned long m) {
    std::vector<Rat> next(m + 2);
    const Rat denom(2 * static_cast<long>(m) + 2);
    for (unsigned long i = 0; i <= m + 1; ++i) {
        Rat acc(0);
        if (i >= 1) acc += Rat(2 * static_cast<long>(m + i)) * cur[i - 1];
        if (i <= m) acc += Rat(4 * static_cast<long>(m) + 2 * static_cast<long>(i) + 3) * cur[i];
        next[i] = acc / denom;
    }
    return next;
}

std::vector<DRow> d_rows_up_to(unsigned long M) {
    std::vector<DRow> rows;
    rows.reserve(M + 1);
    std::vector<Rat> cur{Rat(1)};
    rows.push_back(DRow{0, cur});
    for (unsigned long m = 0; m < M; ++m) {
        cur = d_row_next(cur, m);
        rows.push_back(DRow{m + 1, cur});
        check_d_row(rows.back());
    }
    return rows;
}

DRow d_row_recurrence(unsigned long m) { return d_rows_up_to(m).back(); }

DRow d_row_closed(unsigned long m) {
    // accumulate over k with the C(k,i) factor carried incrementally,
    // so the inner loop is one multiply and one exact small division
    std::vector<Int> num(m + 1, Int(0));
    for (unsigned long k = 0; k <= m; ++k) {
        Int outer = int_pow2(k);
        outer *= binomial(2 * m - 2 * k, static_cast<long>(m - k));
        outer *= binomial(m + k, static_cast<long>(k));
        Int choose = 1; // C(k, i)
        for (unsigned long i = 0; i <= k; ++i) {
            num[i] += outer * choose;
            if (i < k) {
                choose *= k - i;
                mpz_divexact_ui(choose.get_mpz_t(), choose.get_mpz_t(), i + 1);
            }
        }
    }
    DRow row{m, std::vector<Rat>(m + 1)};
    const Int denom = int_pow2(2 * m);
    for (unsigned long i = 0; i <= m; ++i) row.d[i] = Rat(num[i], denom);
    check_d_row(row);
    return row;
}

Poly p_poly(unsigned long m) { return Poly(d_row_recurrence(m).d); }

std::vector<Int> c_row_next(const std::vector<Int>& cur, unsigned long m) {
    std::vector<Int> next(m + 2);
    for (unsigned long i = 0; i <= m + 1; ++i) {
        Int acc = 0;
        if (i <= m) acc += (4 * static_cast<long>(m) - 2 * static_cast<long>(i) + 2) * cur[i];
        if (i >= 1) acc += (6 * static_cast<long>(m) - 2 * static_cast<long>(i) + 5) * cur[i - 1];
        next[i] = acc;
    }
    return next;
}

std::vector<CRow> c_rows_up_to(unsigned long M) {
    std::vector<CRow> rows;
    rows.reserve(M + 1);
    std::vector<Int> cur{Int(1)};
    rows.push_back(CRow{0, cur});
    for (unsigned long m = 0; m < M; ++m) {
        cur = c_row_next(cur, m);
        rows.push_back(CRow{m + 1, cur});
        check_c_row(rows.back());
    }
    return rows;
}

CRow c_row(unsigned long m) { return c_rows_up_to(m).back(); }

Poly q_poly(unsigned long m) { return Poly::from_int_coeffs(c_row(m).c); }

Poly q_ode_next(const Poly& q, unsigned long m) {
    static const Poly two_three_x(std::vector<Rat>{Rat(2), Rat(3)});
    static const Poly two_x_one_x(std::vector<Rat>{Rat(0), Rat(2), Rat(2)}); // 2x(1+x)
    return Rat(2 * static_cast<long>(m) + 1) * (two_three_x * q) - two_x_one_x * q.derivative();
}

std::vector<Poly> q_polys_ode_up_to(unsigned long M) {
    std::vector<Poly> qs;
    qs.reserve(M + 1);
    qs.push_back(Poly::one());
    for (unsigned long m = 0; m < M; ++m) {
        qs.push_back(q_ode_next(qs.back(), m));
    }
    return qs;
}

Poly q_poly_ode(unsigned long m) { return q_polys_ode_up_to(m).back(); }

QSpecialValues q_special_values(unsigned long m) {
    QSpecialValues v;
    Int f2m = factorial(2 * m);
    mpz_divexact(v.at0.get_mpz_t(), f2m.get_mpz_t(), factorial(m).get_mpz_t());
    v.at1 = Rat(factorial(m) * binomial(4 * m + 2, static_cast<long>(2 * m + 1)), int_pow2(m + 1));
    v.at_minus1 = double_factorial_odd(m);
    if (m % 2 == 1) v.at_minus1 = -v.at_minus1;
    return v;
}

namespace {

// Adaptive Simpson with Richardson correction. tol is absolute.
double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
    if (depth > 60) {
        throw quadrature_nonconvergence("adaptive quadrature exceeded recursion depth");
    }
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, a, b);
    return adapt(f, a, b, fa, fm, fb, whole, tol, 0);
}

} // namespace

IntegralCheck integral_check(unsigned long m, double x, double rel_tol) {
    if (!(x > -1.0)) throw std::invalid_argument("integral_check requires x > -1");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("integral_check requires rel_tol > 0");

    IntegralCheck res;

    const double pm = p_poly(m).eval(Rat::from_double(x)).to_double();
    res.rhs = M_PI / (std::pow(2.0, static_cast<double>(m) + 1.5) *
                      std::pow(x + 1.0, static_cast<double>(m) + 0.5)) *
              pm;

    // y = t/(1-t) maps [0,1) onto [0,inf); the integrand decays like
    // y^{-4(m+1)}, so the transformed integrand extends by 0 at t = 1.
    const double mp1 = static_cast<double>(m) + 1.0;
    auto g = [x, mp1](double t) {
        if (t >= 1.0) return 0.0;
        const double y = t / (1.0 - t);
        const double y2 = y * y;
        const double base = 1.0 + 2.0 * x * y2 + y2 * y2;
        const double jac = 1.0 / ((1.0 - t) * (1.0 - t));
        return std::pow(base, -mp1) * jac;
    };
    const double scale = std::fabs(res.rhs) > 0 ? std::fabs(res.rhs) : 1.0;
    res.lhs = integrate_adaptive(g, 0.0, 1.0, 1e-12 * scale);

    res.ok = std::fabs(res.lhs - res.rhs) <= rel_tol * std::fabs(res.rhs);
    return res;
}

} // namespace bmoll
