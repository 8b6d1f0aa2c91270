// Exact rational numbers over GMP's mpq_t. Always canonical: gcd(num,den)=1,
// den >= 1, zero is 0/1. Serialized as "p/q" (or "p" when q=1).
#ifndef ELLBOUND_RAT_HPP
#define ELLBOUND_RAT_HPP

#include <gmp.h>

#include <cmath>
#include <ostream>
#include <string>

#include "ellbound/errors.hpp"
#include "ellbound/int.hpp"

namespace ellbound {

class Rat {
  public:
    Rat() { mpq_init(q_); }
    Rat(int v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
    Rat(long v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
    Rat(const Int& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw division_by_zero("rational with zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    explicit Rat(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw bad_input("not a rational literal: " + s);
        }
        mpq_canonicalize(q_);
    }
    Rat(const Rat& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    mpq_srcptr raw() const { return q_; }

    Int num() const { Int r; mpz_set(r.raw(), mpq_numref(q_)); return r; }
    Int den() const { Int r; mpz_set(r.raw(), mpq_denref(q_)); return r; }
    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    double to_double() const { return mpq_get_d(q_); }
    double log_abs() const { return num().log_abs() - den().log_abs(); }

    std::string str() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw division_by_zero("rational division by zero");
        Rat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator-(const Rat& a) { Rat r; mpq_neg(r.q_, a.q_); return r; }
    Rat& operator+=(const Rat& b) { mpq_add(q_, q_, b.q_); return *this; }
    Rat& operator-=(const Rat& b) { mpq_sub(q_, q_, b.q_); return *this; }
    Rat& operator*=(const Rat& b) { mpq_mul(q_, q_, b.q_); return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    static Rat abs(const Rat& a) { Rat r; mpq_abs(r.q_, a.q_); return r; }
    static Rat inv(const Rat& a) {
        if (a.is_zero()) throw division_by_zero("inverse of zero");
        Rat r;
        mpq_inv(r.q_, a.q_);
        return r;
    }
    static Rat pow(const Rat& a, long e) {
        if (e < 0) return pow(inv(a), -e);
        Rat r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(a.q_), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(a.q_), static_cast<unsigned long>(e));
        return r;
    }

    // True iff a = s^2 for rational s; s returned through root.
    static bool sqrt_exact(const Rat& a, Rat& root) {
        if (a.sign() < 0) return false;
        Int n = a.num(), d = a.den();
        if (!n.is_perfect_square() || !d.is_perfect_square()) return false;
        root = Rat(Int::isqrt(n), Int::isqrt(d));
        return true;
    }

  private:
    mpq_t q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

// Dyadic sqrt enclosure of a nonnegative rational: returns (lo, hi) with
// lo <= sqrt(a) <= hi and hi - lo <= 2^-bits.
inline void sqrt_bounds(const Rat& a, unsigned bits, Rat& lo, Rat& hi) {
    if (a.sign() < 0) throw negative_input("sqrt of negative rational");
    if (a.is_zero()) {
        lo = Rat(0);
        hi = Rat(0);
        return;
    }
    // r = floor(sqrt(floor(num*4^b/den))): r <= sqrt(a)*2^b and
    // (r+1)^2 > floor(...) forces r+1 >= sqrt(num*4^b/den), so r+1 >= sqrt(a)*2^b.
    Int scaled = Int::fdiv_q(a.num() << (2 * bits), a.den());
    Int root = Int::isqrt(scaled);
    Int two_b = Int::pow2(bits);
    lo = Rat(root, two_b);
    hi = Rat(root + Int(1), two_b);
}

} // namespace ellbound

#endif
