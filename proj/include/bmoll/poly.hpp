#ifndef BMOLL_POLY_HPP
#define BMOLL_POLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bmoll/numeric.hpp"

namespace bmoll {

/// Dense univariate polynomial with exact rational coefficients.
/// coeff(i) is the coefficient of x^i. The stored vector is always trimmed:
/// the zero polynomial stores nothing, otherwise the top coefficient is
/// nonzero, so operator== is mathematical equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rat(1)); }
    static Poly constant(const Rat& c);
    static Poly x();
    static Poly from_int_coeffs(const std::vector<Int>& cs);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    /// 0 outside the stored range.
    Rat coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rat(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    Poly operator-() const;
    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(const Rat& c, const Poly& f);
    friend Poly operator*(const Poly& f, const Rat& c) { return c * f; }
    friend bool operator==(const Poly& f, const Poly& g) { return f.coeffs_ == g.coeffs_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    /// f * x^k
    Poly times_x(unsigned long k = 1) const;

    Poly derivative() const;

    /// Exact Horner evaluation.
    Rat eval(const Rat& x0) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

/// x^n f(1/x): coefficient i of the result is coeff (n-i) of f.
/// The reference degree n is an input because the same polynomial is
/// reversed at different centers by the decomposition formulas.
/// Throws degree_too_large when deg f > n.
Poly reverse(const Poly& f, std::size_t n);

/// Exact quotient f / (1-x); throws not_divisible when f(1) != 0
/// (the remainder of synthetic division at x = 1).
Poly div_exact_one_minus_x(const Poly& f);

/// coeff(i) == coeff(n-i) for 0 <= i <= n, zero-padded up to n.
/// Throws degree_too_large when deg f > n.
bool is_symmetric(const Poly& f, std::size_t n);

/// "c0 + c1*x + c2*x^2 + ..." with rationals as "p/q".
std::string to_string(const Poly& f);

/// Coefficients as "p/q" strings (always with the "/q" part), index = power.
std::vector<std::string> coeff_strings(const Poly& f);

} // namespace bmoll

#endif
