#include <doctest.h>

#include <cmath>

#include "bmoll/boros_moll.hpp"
#include "bmoll/kernels.hpp"
#include "bmoll/props.hpp"

using namespace bmoll;

namespace {

std::vector<Rat> rat_row(std::initializer_list<const char*> parts) {
    std::vector<Rat> out;
    for (const char* p : parts) out.push_back(Rat::from_string(p));
    return out;
}

std::vector<Int> int_row(std::initializer_list<long> parts) {
    std::vector<Int> out;
    for (long p : parts) out.emplace_back(p);
    return out;
}

} // namespace

TEST_CASE("d rows by recurrence") {
    CHECK(d_row_recurrence(0).d == rat_row({"1"}));
    CHECK(d_row_recurrence(1).d == rat_row({"3/2", "1"}));
    CHECK(d_row_recurrence(5).d ==
          rat_row({"4389/256", "8589/128", "7161/64", "777/8", "693/16", "63/8"}));
}

TEST_CASE("d rows by the closed binomial sum") {
    CHECK(d_row_closed(0).d == rat_row({"1"}));
    // single surviving term at m=1, i=1: 2 * C(0,0) C(2,1) C(1,1) / 4
    CHECK(d_row_closed(1).d[1] == Rat(1));
    CHECK(d_row_closed(5).d ==
          rat_row({"4389/256", "8589/128", "7161/64", "777/8", "693/16", "63/8"}));
}

TEST_CASE("the two d routes agree") {
    const auto rows = d_rows_up_to(60);
    for (unsigned long m = 0; m <= 60; ++m) {
        CHECK(d_row_closed(m).d == rows[m].d);
    }
}

TEST_CASE("P polynomials") {
    CHECK(p_poly(0) == Poly::one());
    CHECK(p_poly(1) == Poly(rat_row({"3/2", "1"})));
    CHECK(p_poly(5) == Poly(rat_row({"4389/256", "8589/128", "7161/64", "777/8", "693/16", "63/8"})));
}

TEST_CASE("c rows by the integer recurrence") {
    CHECK(c_row(0).c == int_row({1}));
    CHECK(c_row(1).c == int_row({2, 3}));
    CHECK(c_row(2).c == int_row({12, 30, 21}));
}

TEST_CASE("Q polynomials and the scaling relation to d rows") {
    CHECK(q_poly(0) == Poly::one());
    CHECK(q_poly(1) == Poly::from_int_coeffs(int_row({2, 3})));
    CHECK(q_poly(3) == Poly::from_int_coeffs(int_row({120, 420, 516, 231})));

    const auto drows = d_rows_up_to(40);
    const auto crows = c_rows_up_to(40);
    Int scale = 1;
    for (unsigned long m = 0; m <= 40; ++m) {
        if (m > 0) scale *= 2 * static_cast<long>(m);
        for (std::size_t i = 0; i <= m; ++i) {
            CHECK(Rat(crows[m].c[i]) == Rat(scale) * drows[m].d[m - i]);
        }
    }
}

TEST_CASE("differential route matches the integer route") {
    CHECK(q_poly_ode(0) == Poly::one());
    CHECK(q_poly_ode(1) == Poly::from_int_coeffs(int_row({2, 3})));
    CHECK(q_poly_ode(4) == Poly::from_int_coeffs(int_row({1680, 7560, 13140, 10620, 3465})));
    const auto ode = q_polys_ode_up_to(40);
    const auto crows = c_rows_up_to(40);
    for (unsigned long m = 0; m <= 40; ++m) {
        CHECK(ode[m] == Poly::from_int_coeffs(crows[m].c));
    }
}

TEST_CASE("Q equals the scaled reversal of P") {
    const auto drows = d_rows_up_to(40);
    const auto crows = c_rows_up_to(40);
    Int scale = 1;
    for (unsigned long m = 0; m <= 40; ++m) {
        if (m > 0) scale *= 2 * static_cast<long>(m);
        CHECK(Rat(scale) * reverse(Poly(drows[m].d), m) == Poly::from_int_coeffs(crows[m].c));
    }
}

TEST_CASE("closed special values") {
    const QSpecialValues v2 = q_special_values(2);
    CHECK(v2.at0 == 12);
    CHECK(v2.at1 == Rat(63));
    CHECK(v2.at_minus1 == 3);

    const QSpecialValues v0 = q_special_values(0);
    CHECK(v0.at0 == 1);
    CHECK(v0.at1 == Rat(1));
    CHECK(v0.at_minus1 == 1);

    CHECK(q_special_values(5).at0 == 30240);

    for (unsigned long m = 0; m <= 40; ++m) {
        const Poly q = q_poly(m);
        const QSpecialValues v = q_special_values(m);
        CHECK(q.eval(Rat(0)) == Rat(v.at0));
        CHECK(q.eval(Rat(1)) == v.at1);
        CHECK(q.eval(Rat(-1)) == Rat(v.at_minus1));
    }
}

TEST_CASE("rows are strictly positive with a centered mode") {
    const auto drows = d_rows_up_to(300);
    const auto crows = c_rows_up_to(300);
    for (unsigned long m = 0; m <= 300; ++m) {
        for (const Rat& v : drows[m].d) CHECK(v.sign() > 0);
        for (const Int& v : crows[m].c) CHECK(sgn(v) > 0);
        const UnimodalResult u = is_unimodal(Poly(drows[m].d));
        CHECK(u.ok);
        const bool centered = u.mode == m / 2 || u.mode == (m + 1) / 2;
        CHECK(centered);
    }
}

TEST_CASE("quadrature against the closed integral formula") {
    // calculus oracle: int_0^inf dy/(1+y^2)^2 = pi/4
    const IntegralCheck c1 = integral_check(0, 1.0, 1e-10);
    CHECK(c1.ok);
    CHECK(std::fabs(c1.rhs - M_PI / 4.0) < 1e-12);
    CHECK(std::fabs(c1.lhs - M_PI / 4.0) < 1e-10);

    const IntegralCheck c2 = integral_check(0, 0.0, 1e-10);
    CHECK(c2.ok);
    CHECK(std::fabs(c2.rhs - M_PI / std::pow(2.0, 1.5)) < 1e-12);

    CHECK(integral_check(3, 2.0, 1e-8).ok);

    CHECK_THROWS_AS(integral_check(1, -1.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(integral_check(1, 1.0, 0.0), std::invalid_argument);
}
