#ifndef BMOLL_NUMERIC_HPP
#define BMOLL_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "bmoll/error.hpp"

namespace bmoll {

/// Exact signed integer of unbounded magnitude.
using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw error("not a valid integer literal: \"" + s + "\"");
    }
}

inline Int int_pow2(unsigned long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

/// Exact rational, kept reduced with positive denominator at all times.
/// Equality of the stored form is therefore mathematical equality.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}       // NOLINT(google-explicit-constructor)
    Rat(const Int& n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rat(long num, long den) : v_(num, den) { canonicalize_checked(); }
    Rat(const Int& num, const Int& den) : v_(num, den) { canonicalize_checked(); }

    static Rat from_mpq(mpq_class q) {
        Rat r;
        r.v_ = std::move(q);
        r.canonicalize_checked();
        return r;
    }

    /// Parses "p/q" or a plain integer literal.
    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(int_from_string(s));
        Int num = int_from_string(s.substr(0, slash));
        Int den = int_from_string(s.substr(slash + 1));
        return Rat(num, den);
    }

    /// Exact: every double is a dyadic rational.
    static Rat from_double(double x) {
        Rat r;
        mpq_set_d(r.v_.get_mpq_t(), x);
        return r;
    }

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }
    /// Always "p/q", including "p/1".
    std::string str_frac() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat operator-() const { return raw(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw zero_denominator("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    // GMP arithmetic preserves canonical form for canonical operands, so only
    // construction from raw parts needs an explicit pass.
    void canonicalize_checked() {
        if (v_.get_den() == 0) throw zero_denominator("rational with zero denominator");
        v_.canonicalize();
    }
    static Rat raw(mpq_class q) {
        Rat r;
        r.v_ = std::move(q);
        return r;
    }

    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

} // namespace bmoll

#endif
