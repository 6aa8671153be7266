#include "bmoll/gamma.hpp"

#include "bmoll/error.hpp"

namespace bmoll {

namespace {

// Exact quotient f / (1+x); synthetic division from the bottom, with the
// leftover top coefficient as remainder check.
Poly div_exact_one_plus_x(const Poly& f) {
    if (f.is_zero()) return Poly();
    const auto& c = f.coeffs();
    std::vector<Rat> q(c.size() - 1);
    Rat carry(0);
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        q[j] = c[j] - carry;
        carry = q[j];
    }
    if (c.back() != carry) {
        throw internal_error("division by (1+x) left a remainder");
    }
    return Poly(std::move(q));
}

Poly one_plus_x_pow(std::size_t n) {
    Poly p = Poly::one();
    const Poly base(std::vector<Rat>{Rat(1), Rat(1)});
    for (std::size_t i = 0; i < n; ++i) p = p * base;
    return p;
}

} // namespace

std::string to_string(GammaClass c) {
    switch (c) {
        case GammaClass::GammaPositive: return "gamma_positive";
        case GammaClass::AlternatinglyGammaPositive: return "alternatingly_gamma_positive";
        case GammaClass::Neither: return "neither";
        case GammaClass::Both: return "both";
    }
    return "neither";
}

bool is_alternatingly_gamma_positive(GammaClass c) {
    return c == GammaClass::AlternatinglyGammaPositive || c == GammaClass::Both;
}

namespace {

bool all_integer(const Poly& f) {
    for (const Rat& c : f.coeffs()) {
        if (!c.is_integer()) return false;
    }
    return true;
}

// C(len, j) carried across j by one multiply and one exact division
template <typename Fn>
void for_each_binomial(std::size_t len, Fn&& fn) {
    Int choose = 1;
    for (std::size_t j = 0; j <= len; ++j) {
        fn(j, choose);
        if (j < len) {
            choose *= static_cast<unsigned long>(len - j);
            mpz_divexact_ui(choose.get_mpz_t(), choose.get_mpz_t(), j + 1);
        }
    }
}

// in-place mpz peeling; an order of magnitude faster than the generic
// rational path on the all-integer rows this library mostly produces
GammaVector gamma_vector_int(const Poly& f, std::size_t n) {
    std::vector<Int> residue(n + 1);
    for (std::size_t i = 0; i <= n; ++i) residue[i] = f.coeff(static_cast<long>(i)).num();

    GammaVector gv;
    gv.n = n;
    gv.gammas.assign(n / 2 + 1, Rat(0));
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const Int g = residue[k];
        gv.gammas[k] = Rat(g);
        if (sgn(g) != 0) {
            for_each_binomial(n - 2 * k, [&](std::size_t j, const Int& c) {
                mpz_submul(residue[k + j].get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            });
        }
    }
    for (const Int& r : residue) {
        if (sgn(r) != 0) {
            throw internal_residue("gamma_vector: peeling left a nonzero remainder");
        }
    }
    return gv;
}

GammaVector gamma_vector_generic(const Poly& f, std::size_t n) {
    GammaVector gv;
    gv.n = n;
    gv.gammas.assign(n / 2 + 1, Rat(0));

    Poly residue = f;
    Poly pow = one_plus_x_pow(n);
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        // after stripping terms below k, the x^k coefficient of the residue
        // is gamma_k (every remaining basis element starts at x^{k} or later)
        const Rat g = residue.coeff(static_cast<long>(k));
        gv.gammas[k] = g;
        if (!g.is_zero()) {
            residue = residue - (g * pow).times_x(k);
        }
        if (2 * (k + 1) <= n) {
            pow = div_exact_one_plus_x(div_exact_one_plus_x(pow));
        }
    }
    if (!residue.is_zero()) {
        throw internal_residue("gamma_vector: peeling left a nonzero remainder");
    }
    return gv;
}

} // namespace

GammaVector gamma_vector(const Poly& f, std::size_t n) {
    if (!is_symmetric(f, n)) {
        throw not_symmetric("gamma_vector: polynomial is not symmetric about " +
                            std::to_string(n) + "/2");
    }
    return all_integer(f) ? gamma_vector_int(f, n) : gamma_vector_generic(f, n);
}

GammaVector gamma_from_ints(const std::vector<Int>& row, std::size_t n) {
    GammaVector gv;
    gv.n = n;
    gv.gammas.reserve(row.size());
    for (const Int& v : row) gv.gammas.emplace_back(v);
    return gv;
}

Poly from_gamma(const GammaVector& gv) {
    if (gv.empty()) return Poly();
    bool integral = true;
    for (const Rat& g : gv.gammas) integral = integral && g.is_integer();
    if (integral) {
        std::vector<Int> acc(gv.n + 1);
        for (std::size_t k = 0; k < gv.gammas.size() && 2 * k <= gv.n; ++k) {
            const Int g = gv.gammas[k].num();
            if (sgn(g) == 0) continue;
            for_each_binomial(gv.n - 2 * k, [&](std::size_t j, const Int& c) {
                mpz_addmul(acc[k + j].get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            });
        }
        return Poly::from_int_coeffs(acc);
    }
    Poly acc;
    Poly pow = one_plus_x_pow(gv.n);
    for (std::size_t k = 0; k < gv.gammas.size(); ++k) {
        if (!gv.gammas[k].is_zero()) {
            acc = acc + (gv.gammas[k] * pow).times_x(k);
        }
        if (2 * (k + 1) <= gv.n) {
            pow = div_exact_one_plus_x(div_exact_one_plus_x(pow));
        }
    }
    return acc;
}

GammaClass classify(const GammaVector& gv, bool strict) {
    std::size_t last = gv.gammas.size(); // one past the last nonzero
    while (last > 0 && gv.gammas[last - 1].is_zero()) --last;

    bool gp = true, agp = true;
    for (std::size_t k = 0; k < gv.gammas.size(); ++k) {
        const int s = gv.gammas[k].sign();
        const int want_agp = (k % 2 == 0) ? 1 : -1;
        if (strict && k < last) {
            gp = gp && s > 0;
            agp = agp && s == want_agp;
        } else {
            gp = gp && s >= 0;
            agp = agp && (s == 0 || s == want_agp);
        }
    }
    if (gp && agp) return GammaClass::Both;
    if (gp) return GammaClass::GammaPositive;
    if (agp) return GammaClass::AlternatinglyGammaPositive;
    return GammaClass::Neither;
}

Poly signed_poly(const GammaVector& gv) {
    std::vector<Rat> out(gv.gammas.size());
    for (std::size_t k = 0; k < gv.gammas.size(); ++k) {
        out[k] = (k % 2 == 0) ? gv.gammas[k] : -gv.gammas[k];
    }
    return Poly(std::move(out));
}

} // namespace bmoll
