#include "bmoll/triangles.hpp"

#include "bmoll/boros_moll.hpp"
#include "bmoll/error.hpp"
#include "bmoll/kernels.hpp"
#include "bmoll/symdecomp.hpp"

namespace bmoll {

TriangleRow triangle_row_next(const TriangleRow& cur, unsigned long m) {
    const long lm = static_cast<long>(m);
    const std::vector<Int>& alpha = cur.alpha;
    const std::vector<Int>& beta = cur.beta;
    std::vector<Int> na(alpha_row_len(m + 1));
    std::vector<Int> nb(beta_row_len(m + 1));
    auto A = [&](std::size_t k) -> Int { return k < alpha.size() ? alpha[k] : Int(0); };
    auto B = [&](long k) -> Int {
        return (k >= 0 && static_cast<std::size_t>(k) < beta.size()) ? beta[static_cast<std::size_t>(k)]
                                                                     : Int(0);
    };
    na[0] = 2 * (2 * lm + 1) * alpha[0];
    if (m % 2 == 0) {
        const std::size_t t = m / 2;
        for (std::size_t k = 1; k <= t; ++k) {
            const long lk = static_cast<long>(k);
            na[k] = 2 * (2 * lm + 1 - lk) * A(k) - (4 * lk - 1) * B(lk - 1);
        }
        for (std::size_t k = 0; t >= 1 && k <= t - 1; ++k) {
            const long lk = static_cast<long>(k);
            nb[k] = (1 + 4 * lk) * A(k) + (4 * lm + 2 * lk + 3) * B(lk);
        }
        nb[t] = (1 + 4 * static_cast<long>(t)) * A(t);
    } else {
        const std::size_t t = (m - 1) / 2;
        for (std::size_t k = 1; k <= t; ++k) {
            const long lk = static_cast<long>(k);
            na[k] = 2 * (2 * lm + 1 - lk) * A(k) - (4 * lk - 1) * B(lk - 1);
        }
        na[t + 1] = -(3 + 4 * static_cast<long>(t)) * B(static_cast<long>(t));
        for (std::size_t k = 0; k <= t; ++k) {
            const long lk = static_cast<long>(k);
            nb[k] = (1 + 4 * lk) * A(k) + (4 * lm + 2 * lk + 3) * B(lk);
        }
    }
    return TriangleRow{std::move(na), std::move(nb)};
}

TriangleRow triangle_row(unsigned long m) {
    TriangleRow row{{Int(1)}, {}};
    for (unsigned long i = 0; i < m; ++i) row = triangle_row_next(row, i);
    return row;
}

void for_each_triangle_row(unsigned long M, const TriangleRowFn& fn) {
    TriangleRow row{{Int(1)}, {}};
    fn(0, row.alpha, row.beta);
    for (unsigned long m = 0; m < M; ++m) {
        row = triangle_row_next(row, m);
        fn(m + 1, row.alpha, row.beta);
    }
}

AlphaBetaTriangle build_triangle(unsigned long M) {
    AlphaBetaTriangle tri;
    tri.alpha.reserve(M + 1);
    tri.beta.reserve(M + 1);
    for_each_triangle_row(M, [&](unsigned long m, const std::vector<Int>& a, const std::vector<Int>& b) {
        if (a.size() != alpha_row_len(m) || b.size() != beta_row_len(m)) {
            throw internal_error("triangle row " + std::to_string(m) + " has wrong length");
        }
        if (m >= 1) {
            for (std::size_t k = 0; k < a.size(); ++k) {
                if ((k % 2 == 0 ? sgn(a[k]) : -sgn(a[k])) <= 0) {
                    throw internal_error("alpha sign law violated at (" + std::to_string(m) + "," +
                                         std::to_string(k) + ")");
                }
            }
            for (std::size_t k = 0; k < b.size(); ++k) {
                if ((k % 2 == 0 ? sgn(b[k]) : -sgn(b[k])) <= 0) {
                    throw internal_error("beta sign law violated at (" + std::to_string(m) + "," +
                                         std::to_string(k) + ")");
                }
            }
        }
        tri.alpha.push_back(a);
        tri.beta.push_back(b);
    });
    return tri;
}

std::pair<Poly, Poly> signed_pair_next(const std::pair<Poly, Poly>& cur, unsigned long m) {
    const Rat fm(4 * static_cast<long>(m));
    const Poly& alpha = cur.first;
    const Poly& beta = cur.second;
    const Poly xa = alpha.derivative().times_x(); // x * alpha'
    const Poly xb = beta.derivative().times_x();  // x * beta'
    Poly na = (fm + Rat(2)) * alpha - Rat(2) * xa + Rat(3) * beta.times_x() + Rat(4) * xb.times_x();
    Poly nb = alpha + Rat(4) * xa + (fm + Rat(3)) * beta + Rat(2) * xb;
    return {std::move(na), std::move(nb)};
}

std::vector<std::pair<Poly, Poly>> signed_sequence(unsigned long M) {
    std::vector<std::pair<Poly, Poly>> out;
    out.reserve(M + 1);
    out.emplace_back(Poly::one(), Poly());
    for (unsigned long m = 0; m < M; ++m) {
        out.push_back(signed_pair_next(out.back(), m));
    }
    return out;
}

std::pair<GammaVector, GammaVector> gamma_via_decomposition(unsigned long m) {
    const SymDecomp d = decompose(q_poly(m), m);
    GammaVector a = gamma_vector(d.a, m);
    GammaVector b;
    if (m >= 1) b = gamma_vector(d.b, m - 1);
    return {std::move(a), std::move(b)};
}

namespace {

Poly linear(long c0, long c1) { return Poly(std::vector<Rat>{Rat(c0), Rat(c1)}); }

} // namespace

bool component_recurrences_hold(unsigned long m, const ComponentPair& cur, const ComponentPair& nxt,
                                const Poly& rev_cur, const Poly& rev_next, std::string* diag) {
    const long lm = static_cast<long>(m);
    const Poly one_x = linear(1, 1);
    const Poly one_x2 = one_x * one_x;
    const Poly &a = cur.a, &b = cur.b;
    const Poly da = a.derivative(), db = b.derivative();

    const Poly lhs_a = linear(1, -1) * nxt.a;
    const Poly rhs_a = Rat(-2) * (one_x * linear(-(2 * lm + 1), lm + 1) * a) -
                       Rat(2) * (one_x2 * da).times_x() +
                       (linear(-3, 4 * lm - 1) * b).times_x() -
                       Rat(4) * (one_x * db).times_x(2);
    if (lhs_a != rhs_a) {
        if (diag) *diag = "a-component recurrence fails at m = " + std::to_string(m);
        return false;
    }

    const Poly lhs_b = linear(-1, 1) * nxt.b;
    const Poly rhs_b = linear(-1, 4 * lm + 1) * a - Rat(4) * (one_x * da).times_x() +
                       linear(-(4 * lm + 3), 6 * lm + 1) * one_x * b -
                       Rat(2) * (one_x2 * db).times_x();
    if (lhs_b != rhs_b) {
        if (diag) *diag = "b-component recurrence fails at m = " + std::to_string(m);
        return false;
    }

    const Poly rhs_r =
        linear(4 * lm + 3, 2 * lm + 2) * rev_cur + Rat(2) * (one_x * rev_cur.derivative()).times_x();
    if (rev_next != rhs_r) {
        if (diag) *diag = "reversal recurrence fails at m = " + std::to_string(m);
        return false;
    }
    return true;
}

bool check_component_recurrences(unsigned long m, std::string* diag) {
    const Poly qm = q_poly(m);
    const Poly qm1 = q_poly(m + 1);
    const SymDecomp cur = decompose(qm, m);
    const SymDecomp nxt = decompose(qm1, m + 1);
    return component_recurrences_hold(m, ComponentPair{cur.a, cur.b}, ComponentPair{nxt.a, nxt.b},
                                      reverse(qm, m), reverse(qm1, m + 1), diag);
}

Poly p_from_gamma_rows(unsigned long m) {
    const TriangleRow row = triangle_row(m);
    const Poly a = from_gamma(gamma_from_ints(row.alpha, m));
    const Poly b = m >= 1 ? from_gamma(gamma_from_ints(row.beta, m - 1)) : Poly();
    const Rat scale(Int(1), int_pow2(m) * factorial(m));
    return scale * (a + b);
}

} // namespace bmoll
