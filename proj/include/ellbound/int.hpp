// Arbitrary-precision integer, a value-semantic wrapper over GMP's mpz_t.
#ifndef ELLBOUND_INT_HPP
#define ELLBOUND_INT_HPP

#include <gmp.h>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "ellbound/errors.hpp"

namespace ellbound {

class Int {
  public:
    Int() { mpz_init(z_); }
    Int(int v) { mpz_init_set_si(z_, v); }
    Int(long v) { mpz_init_set_si(z_, v); }
    Int(long long v) {
        mpz_init(z_);
        if (v >= 0) {
            mpz_import(z_, 1, 1, sizeof(v), 0, 0, &v);
        } else {
            unsigned long long u = ~static_cast<unsigned long long>(v) + 1ULL;
            mpz_import(z_, 1, 1, sizeof(u), 0, 0, &u);
            mpz_neg(z_, z_);
        }
    }
    Int(unsigned long v) { mpz_init_set_ui(z_, v); }
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw bad_input("not an integer literal: " + s);
        }
    }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }

    bool fits_si() const { return mpz_fits_slong_p(z_) != 0; }
    long to_si() const { return mpz_get_si(z_); }
    double to_double() const { return mpz_get_d(z_); }
    // log with |error| <= a few ulp; exact -inf is never requested (callers
    // guard zero).
    double log_abs() const {
        signed long exp2;
        double m = mpz_get_d_2exp(&exp2, z_);
        return std::log(std::abs(m)) + static_cast<double>(exp2) * 0.6931471805599453;
    }
    size_t bits() const { return mpz_sizeinbase(z_, 2); }
    size_t digits() const { return mpz_sizeinbase(z_, 10); }

    std::string str() const {
        char* c = mpz_get_str(nullptr, 10, z_);
        std::string s(c);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(c, s.size() + 1);
        return s;
    }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.z_, a.z_, b.z_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a) { Int r; mpz_neg(r.z_, a.z_); return r; }
    Int& operator+=(const Int& b) { mpz_add(z_, z_, b.z_); return *this; }
    Int& operator-=(const Int& b) { mpz_sub(z_, z_, b.z_); return *this; }
    Int& operator*=(const Int& b) { mpz_mul(z_, z_, b.z_); return *this; }
    Int& operator<<=(unsigned long k) { mpz_mul_2exp(z_, z_, k); return *this; }
    friend Int operator<<(const Int& a, unsigned long k) { Int r; mpz_mul_2exp(r.z_, a.raw(), k); return r; }

    // Truncated division (C semantics), plus exact and floor variants.
    friend Int operator/(const Int& a, const Int& b) {
        if (b.is_zero()) throw division_by_zero("integer division by zero");
        Int r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator%(const Int& a, const Int& b) {
        if (b.is_zero()) throw division_by_zero("integer mod by zero");
        Int r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    static Int divexact(const Int& a, const Int& b) {
        Int r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    static Int fdiv_q(const Int& a, const Int& b) {
        Int r;
        mpz_fdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    static Int cdiv_q(const Int& a, const Int& b) {
        Int r;
        mpz_cdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    static Int mod_nonneg(const Int& a, const Int& m) {
        Int r;
        mpz_fdiv_r(r.z_, a.z_, m.z_);
        return r;
    }
    bool divisible_by(const Int& b) const { return mpz_divisible_p(z_, b.z_) != 0; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) >= 0; }
    int cmp_si(long v) const { return mpz_cmp_si(z_, v); }

    static Int gcd(const Int& a, const Int& b) { Int r; mpz_gcd(r.z_, a.z_, b.z_); return r; }
    static Int lcm(const Int& a, const Int& b) { Int r; mpz_lcm(r.z_, a.z_, b.z_); return r; }
    static Int abs(const Int& a) { Int r; mpz_abs(r.z_, a.z_); return r; }
    static Int pow(const Int& a, unsigned long e) { Int r; mpz_pow_ui(r.z_, a.z_, e); return r; }
    static Int pow2(unsigned long e) { Int r; mpz_setbit(r.z_, e); return r; }

    // floor(sqrt(a)), a >= 0
    static Int isqrt(const Int& a) {
        Int r;
        mpz_sqrt(r.z_, a.z_);
        return r;
    }
    bool is_perfect_square() const { return sign() >= 0 && mpz_perfect_square_p(z_) != 0; }
    // 0 composite, 1 probable prime, 2 proven prime (GMP semantics)
    int probab_prime(int reps = 40) const { return mpz_probab_prime_p(z_, reps); }

    size_t val2() const { return is_zero() ? 0 : mpz_scan1(z_, 0); }
    // largest k with p^k | a (a != 0); quotient returned through a_out
    static unsigned long remove_factor(Int& a, const Int& p) {
        Int q;
        unsigned long k = mpz_remove(q.z_, a.z_, p.z_);
        a = q;
        return k;
    }

  private:
    mpz_t z_;
};

inline std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

} // namespace ellbound

#endif
