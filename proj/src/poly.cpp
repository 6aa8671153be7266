#include "bmoll/poly.hpp"

#include <algorithm>
#include <sstream>

#include "bmoll/error.hpp"

namespace bmoll {

Poly Poly::constant(const Rat& c) {
    if (c.is_zero()) return Poly();
    return Poly(std::vector<Rat>{c});
}

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::from_int_coeffs(const std::vector<Int>& cs) {
    std::vector<Rat> rs;
    rs.reserve(cs.size());
    for (const Int& c : cs) rs.emplace_back(c);
    return Poly(std::move(rs));
}

Poly Poly::operator-() const {
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Poly(std::move(out));
}

Poly operator+(const Poly& f, const Poly& g) {
    std::vector<Rat> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f.coeff(static_cast<long>(i)) + g.coeff(static_cast<long>(i));
    }
    return Poly(std::move(out));
}

Poly operator-(const Poly& f, const Poly& g) {
    std::vector<Rat> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f.coeff(static_cast<long>(i)) - g.coeff(static_cast<long>(i));
    }
    return Poly(std::move(out));
}

Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<Rat> out(f.coeffs_.size() + g.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            out[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly operator*(const Rat& c, const Poly& f) {
    if (c.is_zero()) return Poly();
    std::vector<Rat> out(f.coeffs_.size());
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) out[i] = c * f.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::times_x(unsigned long k) const {
    if (k == 0) return *this;
    if (is_zero()) return Poly();
    std::vector<Rat> out(coeffs_.size() + k, Rat(0));
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<long>(k));
    return Poly(std::move(out));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
    }
    return Poly(std::move(out));
}

Rat Poly::eval(const Rat& x0) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x0 + *it;
    }
    return acc;
}

Poly reverse(const Poly& f, std::size_t n) {
    if (f.degree() > static_cast<long>(n)) {
        throw degree_too_large("reverse: deg f = " + std::to_string(f.degree()) +
                               " exceeds reference degree " + std::to_string(n));
    }
    std::vector<Rat> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out[i] = f.coeff(static_cast<long>(n - i));
    }
    return Poly(std::move(out));
}

Poly div_exact_one_minus_x(const Poly& f) {
    if (f.is_zero()) return Poly();
    // (1-x) * q = f  <=>  q_i = sum_{j<=i} f_j; the full sum is the
    // remainder f(1) and must vanish.
    const auto& cs = f.coeffs();
    std::vector<Rat> q(cs.size() - 1);
    Rat run(0);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        run += cs[i];
        q[i] = run;
    }
    run += cs.back();
    if (!run.is_zero()) {
        throw not_divisible("div_exact_one_minus_x: f(1) = " + run.str() + " != 0");
    }
    return Poly(std::move(q));
}

bool is_symmetric(const Poly& f, std::size_t n) {
    if (f.degree() > static_cast<long>(n)) {
        throw degree_too_large("is_symmetric: deg f = " + std::to_string(f.degree()) +
                               " exceeds reference degree " + std::to_string(n));
    }
    for (std::size_t i = 0; 2 * i <= n; ++i) {
        if (f.coeff(static_cast<long>(i)) != f.coeff(static_cast<long>(n - i))) return false;
    }
    return true;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Rat& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        Rat a = abs(c);
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rat(1)) && i > 0;
        if (!unit) out << a.str();
        if (i > 0) {
            if (!unit) out << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::vector<std::string> coeff_strings(const Poly& f) {
    std::vector<std::string> out;
    out.reserve(f.coeffs().size());
    for (const Rat& c : f.coeffs()) out.push_back(c.str_frac());
    return out;
}

} // namespace bmoll
