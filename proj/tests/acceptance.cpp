// Acceptance suite: one line per criterion, exit 1 on any failure.
// Ranges and tolerances are fixed here, not configurable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bmoll/boros_moll.hpp"
#include "bmoll/gamma.hpp"
#include "bmoll/jacobi.hpp"
#include "bmoll/kernels.hpp"
#include "bmoll/poly.hpp"
#include "bmoll/props.hpp"
#include "bmoll/symdecomp.hpp"
#include "bmoll/triangles.hpp"
#include "bmoll/verify.hpp"

using namespace bmoll;

namespace {

struct Criterion {
    std::string label;
    double budget_seconds; // 0 = no budget
    std::function<bool(std::string&)> run;
};

Poly int_poly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

bool golden_reproduction(std::string& why) {
    const std::vector<std::string> p5 = {"4389/256", "8589/128", "7161/64",
                                         "777/8",    "693/16",   "63/8"};
    const Poly p = p_poly(5);
    for (std::size_t i = 0; i < p5.size(); ++i) {
        if (p.coeff(static_cast<long>(i)) != Rat::from_string(p5[i])) {
            why = "P_5 coefficient " + std::to_string(i);
            return false;
        }
    }

    const std::vector<std::pair<Poly, Poly>> decomps = {
        {int_poly({2, 2}), int_poly({1})},
        {int_poly({12, 21, 12}), int_poly({9, 9})},
        {int_poly({120, 309, 309, 120}), int_poly({111, 207, 111})},
        {int_poly({1680, 5775, 8295, 5775, 1680}), int_poly({1785, 4845, 4845, 1785})},
        {int_poly({30240, 130725, 246015, 246015, 130725, 30240}),
         int_poly({35595, 126945, 183645, 126945, 35595})},
    };
    for (unsigned long m = 1; m <= 5; ++m) {
        const SymDecomp d = decompose(q_poly(m), m);
        if (d.a != decomps[m - 1].first || d.b != decomps[m - 1].second) {
            why = "decomposition of Q_" + std::to_string(m);
            return false;
        }
    }

    const std::vector<std::pair<Poly, Poly>> signed_rows = {
        {int_poly({2}), int_poly({1})},
        {int_poly({12, 3}), int_poly({9})},
        {int_poly({120, 51}), int_poly({111, 15})},
        {int_poly({1680, 945, 105}), int_poly({1785, 510})},
        {int_poly({30240, 20475, 5040}), int_poly({35595, 15435, 945})},
    };
    const auto seq = signed_sequence(5);
    for (unsigned long m = 1; m <= 5; ++m) {
        if (seq[m].first != signed_rows[m - 1].first || seq[m].second != signed_rows[m - 1].second) {
            why = "signed polynomials at m = " + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool route_equivalence(std::string& why) {
    const auto drows = d_rows_up_to(300);
    for (unsigned long m = 0; m <= 200; ++m) {
        if (d_row_closed(m).d != drows[m].d) {
            why = "d routes differ at m = " + std::to_string(m);
            return false;
        }
    }

    const auto crows = c_rows_up_to(300);
    const auto ode = q_polys_ode_up_to(300);
    const auto seq = signed_sequence(300);
    Int scale = 1;
    TriangleRow trow{{Int(1)}, {}};
    for (unsigned long m = 0; m <= 300; ++m) {
        if (m > 0) {
            scale *= 2 * static_cast<long>(m);
            trow = triangle_row_next(trow, m - 1);
        }
        const Poly q = Poly::from_int_coeffs(crows[m].c);
        if (ode[m] != q) {
            why = "differential route differs at m = " + std::to_string(m);
            return false;
        }
        if (Rat(scale) * reverse(Poly(drows[m].d), m) != q) {
            why = "reversal route differs at m = " + std::to_string(m);
            return false;
        }

        const SymDecomp dec = decompose(q, m);
        const GammaVector ga = gamma_vector(dec.a, m);
        if (ga.gammas.size() != trow.alpha.size()) {
            why = "alpha row length at m = " + std::to_string(m);
            return false;
        }
        for (std::size_t k = 0; k < ga.gammas.size(); ++k) {
            const Rat flip = (k % 2 == 0) ? Rat(trow.alpha[k]) : Rat(-trow.alpha[k]);
            if (ga.gammas[k] != Rat(trow.alpha[k]) ||
                seq[m].first.coeff(static_cast<long>(k)) != flip) {
                why = "alpha routes differ at (" + std::to_string(m) + "," + std::to_string(k) + ")";
                return false;
            }
        }
        if (m >= 1) {
            const GammaVector gb = gamma_vector(dec.b, m - 1);
            if (gb.gammas.size() != trow.beta.size()) {
                why = "beta row length at m = " + std::to_string(m);
                return false;
            }
            for (std::size_t k = 0; k < gb.gammas.size(); ++k) {
                const Rat flip = (k % 2 == 0) ? Rat(trow.beta[k]) : Rat(-trow.beta[k]);
                if (gb.gammas[k] != Rat(trow.beta[k]) ||
                    seq[m].second.coeff(static_cast<long>(k)) != flip) {
                    why = "beta routes differ at (" + std::to_string(m) + "," + std::to_string(k) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

bool sign_alternation_1000(std::string& why) {
    bool ok = true;
    for_each_triangle_row(1000, [&](unsigned long m, const std::vector<Int>& a,
                                    const std::vector<Int>& b) {
        if (!ok || m == 0) return;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if ((k % 2 == 0 ? sgn(a[k]) : -sgn(a[k])) <= 0) {
                why = "alpha sign at (" + std::to_string(m) + "," + std::to_string(k) + ")";
                ok = false;
                return;
            }
        }
        for (std::size_t k = 0; k < b.size(); ++k) {
            if ((k % 2 == 0 ? sgn(b[k]) : -sgn(b[k])) <= 0) {
                why = "beta sign at (" + std::to_string(m) + "," + std::to_string(k) + ")";
                ok = false;
                return;
            }
        }
    });
    return ok;
}

bool closed_values_300(std::string& why) {
    const auto crows = c_rows_up_to(300);
    for (unsigned long m = 0; m <= 300; ++m) {
        const Poly q = Poly::from_int_coeffs(crows[m].c);
        const QSpecialValues v = q_special_values(m);
        if (q.eval(Rat(0)) != Rat(v.at0) || q.eval(Rat(1)) != v.at1 ||
            q.eval(Rat(-1)) != Rat(v.at_minus1)) {
            why = "closed value mismatch at m = " + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool shape_properties_300(std::string& why) {
    const auto drows = d_rows_up_to(300);
    const auto crows = c_rows_up_to(300);
    for (unsigned long m = 0; m <= 300; ++m) {
        const Poly p = Poly(drows[m].d);
        const Poly q = Poly::from_int_coeffs(crows[m].c);
        if (!is_spiral(p)) {
            why = "P_" + std::to_string(m) + " not spiral";
            return false;
        }
        if (!is_alternatingly_increasing(q)) {
            why = "reversal of P_" + std::to_string(m) + " not alternatingly increasing";
            return false;
        }
        if (m >= 1) {
            const SymDecomp dec = decompose(q, m);
            if (!is_unimodal(dec.a).ok || !is_unimodal(dec.b).ok) {
                why = "decomposition component of Q_" + std::to_string(m) + " not unimodal";
                return false;
            }
        }
    }
    return true;
}

bool recurrence_identities_50(std::string& why) {
    for (unsigned long m = 0; m <= 50; ++m) {
        std::string diag;
        if (!check_component_recurrences(m, &diag)) {
            why = diag;
            return false;
        }
    }
    return true;
}

bool jacobi_specialization_50(std::string& why) {
    for (unsigned long m = 0; m <= 50; ++m) {
        if (!specialization_check(m)) {
            why = "specialization differs at m = " + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool quadrature_check(std::string& why) {
    for (unsigned long m = 0; m <= 5; ++m) {
        for (double x : {0.0, 0.5, 1.0, 3.0}) {
            const IntegralCheck c = integral_check(m, x, 1e-8);
            if (!c.ok) {
                std::ostringstream out;
                out << "m = " << m << ", x = " << x << ": lhs " << c.lhs << " rhs " << c.rhs;
                why = out.str();
                return false;
            }
        }
    }
    return true;
}

bool oeis_fixture_check(std::string& why) {
    const auto crows = c_rows_up_to(24);
    std::vector<Int> q0;
    for (const CRow& row : crows) q0.push_back(row.c[0]);
    if (!oeis_compare("A001813", q0, 0)) {
        why = "Q_m(0) prefix differs from A001813";
        return false;
    }

    std::vector<Int> q1;
    for (unsigned long m = 0; m <= 15; ++m) {
        Rat sum(0);
        for (const Int& c : crows[m].c) sum += Rat(c);
        if (!sum.is_integer()) {
            why = "Q_m(1) not an integer at m = " + std::to_string(m);
            return false;
        }
        q1.push_back(sum.num());
    }
    if (!oeis_compare("A334907", q1, 0)) {
        why = "Q_m(1) prefix differs from A334907";
        return false;
    }

    std::vector<Int> beta0;
    for_each_triangle_row(
        5, [&](unsigned long m, const std::vector<Int>&, const std::vector<Int>& b) {
            if (m >= 1) beta0.push_back(b[0]);
        });
    if (!oeis_compare("A000369-col2", beta0, 1)) {
        why = "beta_{m,0} differs from the A000369 column";
        return false;
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden reproduction of the m <= 5 displays", 1.0, golden_reproduction},
        {"route equivalence (d <= 200; Q and gamma rows <= 300)", 60.0, route_equivalence},
        {"strict gamma sign alternation for m <= 1000", 300.0, sign_alternation_1000},
        {"closed values of Q at 0, 1, -1 for m <= 300", 0.0, closed_values_300},
        {"spiral / alternatingly increasing / unimodal components for m <= 300", 0.0,
         shape_properties_300},
        {"component and reversal recurrences for m <= 50", 0.0, recurrence_identities_50},
        {"Jacobi specialization for m <= 50", 0.0, jacobi_specialization_50},
        {"quadrature vs closed integral, m <= 5, x in {0,1/2,1,3}, rel 1e-8", 5.0, quadrature_check},
        {"OEIS fixtures: A001813 (25 terms), A334907 (16 terms), A000369 column", 0.0,
         oeis_fixture_check},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = criteria[i].run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        if (ok && criteria[i].budget_seconds > 0 && elapsed > criteria[i].budget_seconds) {
            ok = false;
            why = "over time budget of " + std::to_string(criteria[i].budget_seconds) + " s";
        }
        std::printf("[%s] criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].label.c_str(), elapsed, why.empty() ? "" : " -- ",
                    why.c_str());
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
