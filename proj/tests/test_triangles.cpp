#include <doctest.h>

#include "bmoll/boros_moll.hpp"
#include "bmoll/kernels.hpp"
#include "bmoll/triangles.hpp"

using namespace bmoll;

namespace {

std::vector<Int> row(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

Poly make(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

} // namespace

TEST_CASE("triangle rows at small m") {
    const AlphaBetaTriangle tri = build_triangle(5);
    CHECK(tri.alpha[0] == row({1}));
    CHECK(tri.beta[0].empty());
    CHECK(tri.alpha[1] == row({2}));
    CHECK(tri.beta[1] == row({1}));
    CHECK(tri.alpha[2] == row({12, -3}));
    CHECK(tri.beta[2] == row({9}));
    CHECK(tri.alpha[3] == row({120, -51}));
    CHECK(tri.beta[3] == row({111, -15}));
    CHECK(tri.alpha[4] == row({1680, -945, 105}));
    CHECK(tri.beta[4] == row({1785, -510}));
    CHECK(tri.alpha[5] == row({30240, -20475, 5040}));
    CHECK(tri.beta[5] == row({35595, -15435, 945}));
}

TEST_CASE("row lengths follow the parity formulas") {
    const AlphaBetaTriangle tri = build_triangle(30);
    for (unsigned long m = 0; m <= 30; ++m) {
        CHECK(tri.alpha[m].size() == alpha_row_len(m));
        CHECK(tri.beta[m].size() == beta_row_len(m));
    }
}

TEST_CASE("signed polynomial system at small m") {
    const auto seq = signed_sequence(5);
    CHECK(seq[0].first == Poly::one());
    CHECK(seq[0].second == Poly::zero());
    CHECK(seq[3].first == make({120, 51}));
    CHECK(seq[3].second == make({111, 15}));
    CHECK(seq[5].first == make({30240, 20475, 5040}));
    CHECK(seq[5].second == make({35595, 15435, 945}));
}

TEST_CASE("gamma extraction of the decomposition matches the triangle") {
    const auto [a2, b2] = gamma_via_decomposition(2);
    CHECK(a2.gammas == std::vector<Rat>{Rat(12), Rat(-3)});
    CHECK(b2.gammas == std::vector<Rat>{Rat(9)});

    const auto [a0, b0] = gamma_via_decomposition(0);
    CHECK(a0.gammas == std::vector<Rat>{Rat(1)});
    CHECK(b0.empty());

    const AlphaBetaTriangle tri = build_triangle(5);
    const auto [a5, b5] = gamma_via_decomposition(5);
    REQUIRE(a5.gammas.size() == tri.alpha[5].size());
    for (std::size_t k = 0; k < a5.gammas.size(); ++k) CHECK(a5.gammas[k] == Rat(tri.alpha[5][k]));
    REQUIRE(b5.gammas.size() == tri.beta[5].size());
    for (std::size_t k = 0; k < b5.gammas.size(); ++k) CHECK(b5.gammas[k] == Rat(tri.beta[5][k]));
}

TEST_CASE("three triangle routes agree") {
    const unsigned long M = 30;
    const AlphaBetaTriangle tri = build_triangle(M);
    const auto seq = signed_sequence(M);
    for (unsigned long m = 0; m <= M; ++m) {
        const auto [ga, gb] = gamma_via_decomposition(m);
        REQUIRE(ga.gammas.size() == tri.alpha[m].size());
        for (std::size_t k = 0; k < ga.gammas.size(); ++k) {
            CHECK(ga.gammas[k] == Rat(tri.alpha[m][k]));
            const Rat flip = (k % 2 == 0) ? Rat(tri.alpha[m][k]) : Rat(-tri.alpha[m][k]);
            CHECK(seq[m].first.coeff(static_cast<long>(k)) == flip);
        }
        REQUIRE(gb.gammas.size() == tri.beta[m].size());
        for (std::size_t k = 0; k < gb.gammas.size(); ++k) {
            CHECK(gb.gammas[k] == Rat(tri.beta[m][k]));
            const Rat flip = (k % 2 == 0) ? Rat(tri.beta[m][k]) : Rat(-tri.beta[m][k]);
            CHECK(seq[m].second.coeff(static_cast<long>(k)) == flip);
        }
    }
}

TEST_CASE("strict sign alternation and the closed first column") {
    const unsigned long M = 100;
    for_each_triangle_row(M, [](unsigned long m, const std::vector<Int>& a,
                                const std::vector<Int>& b) {
        if (m == 0) return;
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK((k % 2 == 0 ? sgn(a[k]) : -sgn(a[k])) > 0);
        }
        for (std::size_t k = 0; k < b.size(); ++k) {
            CHECK((k % 2 == 0 ? sgn(b[k]) : -sgn(b[k])) > 0);
        }
        Int want;
        Int f2m = factorial(2 * m);
        mpz_divexact(want.get_mpz_t(), f2m.get_mpz_t(), factorial(m).get_mpz_t());
        CHECK(a[0] == want);
    });
}

TEST_CASE("beta first column at small m") {
    const AlphaBetaTriangle tri = build_triangle(5);
    const std::vector<long> want = {1, 9, 111, 1785, 35595};
    for (unsigned long m = 1; m <= 5; ++m) CHECK(tri.beta[m][0] == want[m - 1]);
}

TEST_CASE("signed system polynomials stay positive") {
    const auto seq = signed_sequence(100);
    for (unsigned long m = 1; m <= 100; ++m) {
        for (const Rat& c : seq[m].first.coeffs()) CHECK(c.sign() > 0);
        for (const Rat& c : seq[m].second.coeffs()) CHECK(c.sign() > 0);
    }
}

TEST_CASE("component recurrences hold") {
    CHECK(check_component_recurrences(0));
    CHECK(check_component_recurrences(1));
    CHECK(check_component_recurrences(10));
    for (unsigned long m = 0; m <= 25; ++m) {
        std::string diag;
        const bool ok = check_component_recurrences(m, &diag);
        INFO(diag);
        CHECK(ok);
    }
}

TEST_CASE("P rebuilt from the gamma rows") {
    CHECK(p_from_gamma_rows(0) == Poly::one());
    CHECK(p_from_gamma_rows(1) == Poly(std::vector<Rat>{Rat(3, 2), Rat(1)}));
    for (unsigned long m = 0; m <= 30; ++m) {
        CHECK(p_from_gamma_rows(m) == p_poly(m));
    }
}

TEST_CASE("streamed row equals the materialized row") {
    const AlphaBetaTriangle tri = build_triangle(12);
    const TriangleRow r = triangle_row(12);
    CHECK(r.alpha == tri.alpha[12]);
    CHECK(r.beta == tri.beta[12]);
}
