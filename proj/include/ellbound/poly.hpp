// Dense univariate polynomials over Z and Q (coefficients low-to-high).
// Degrees in this project never exceed 8, so quadratic algorithms and
// fraction-free determinants are the right tool.
#ifndef ELLBOUND_POLY_HPP
#define ELLBOUND_POLY_HPP

#include <vector>

#include "ellbound/int.hpp"
#include "ellbound/modpoly.hpp"
#include "ellbound/rat.hpp"

namespace ellbound {

struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const Int& lead() const { return c.back(); }
    bool monic() const { return !c.empty() && c.back().is_one(); }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c == b.c; }
};

struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    explicit QPoly(const ZPoly& z) {
        c.reserve(z.c.size());
        for (const auto& v : z.c) c.emplace_back(v);
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
};

// ---- Z[x] ----

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly{};
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return ZPoly(std::move(r));
}

inline ZPoly zp_derivative(const ZPoly& a) {
    if (a.c.size() <= 1) return ZPoly{};
    std::vector<Int> r;
    r.reserve(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.push_back(a.c[i] * Int(static_cast<long>(i)));
    return ZPoly(std::move(r));
}

inline Int zp_eval(const ZPoly& a, const Int& x) {
    Int r(0);
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

inline Rat zp_eval(const ZPoly& a, const Rat& x) {
    Rat r(0);
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + Rat(a.c[i]);
    return r;
}

inline Int zp_content(const ZPoly& a) {
    Int g(0);
    for (const auto& v : a.c) g = Int::gcd(g, v);
    return g;
}

inline ModPoly zp_mod(const ZPoly& a, u64 p) {
    std::vector<u64> r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) {
        Int m = Int::mod_nonneg(a.c[i], Int(static_cast<long>(p)));
        r[i] = static_cast<u64>(m.to_si());
    }
    return ModPoly(p, std::move(r));
}

// Resultant via fraction-free Gaussian elimination (Bareiss) on the Sylvester
// matrix; exact over Z.
inline Int zp_resultant(const ZPoly& a, const ZPoly& b) {
    int m = a.deg(), n = b.deg();
    if (m < 0 || n < 0) return Int(0);
    if (m == 0) return Int::pow(a.c[0], static_cast<unsigned long>(n));
    if (n == 0) return Int::pow(b.c[0], static_cast<unsigned long>(m));
    int size = m + n;
    std::vector<std::vector<Int>> s(size, std::vector<Int>(size, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.c[n - j];

    Int prev(1);
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (s[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < size; ++i)
                if (!s[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Int(0);
            std::swap(s[k], s[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                s[i][j] = Int::divexact(s[k][k] * s[i][j] - s[i][k] * s[k][j], prev);
            }
            s[i][k] = Int(0);
        }
        prev = s[k][k];
    }
    Int det = s[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f); deg 1 gives 1, deg 0 invalid.
inline Int zp_discriminant(const ZPoly& f) {
    int n = f.deg();
    if (n <= 0) throw bad_input("discriminant of constant polynomial");
    if (n == 1) return Int(1);
    Int res = zp_resultant(f, zp_derivative(f));
    Int d = Int::divexact(res, f.lead());
    int s = (static_cast<long>(n) * (n - 1) / 2) % 2;
    return s ? -d : d;
}

// ---- Q[x] ----

inline QPoly qp_add(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] += b.c[i];
    }
    return QPoly(std::move(r));
}

inline QPoly qp_sub(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] -= b.c[i];
    }
    return QPoly(std::move(r));
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(r));
}

inline QPoly qp_scale(const QPoly& a, const Rat& k) {
    std::vector<Rat> r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i] * k;
    return QPoly(std::move(r));
}

inline void qp_divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    r = a;
    q = QPoly{};
    if (r.deg() < b.deg()) return;
    std::vector<Rat> qc(r.deg() - b.deg() + 1, Rat(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        Rat coef = r.lead() / b.lead();
        qc[k] = coef;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + k] -= coef * b.c[i];
        r.trim();
    }
    q = QPoly(std::move(qc));
}

inline QPoly qp_mod(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    qp_divrem(a, b, q, r);
    return r;
}

inline QPoly qp_monic(const QPoly& a) {
    if (a.is_zero()) return a;
    return qp_scale(a, Rat::inv(a.lead()));
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = qp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

inline QPoly qp_derivative(const QPoly& a) {
    if (a.c.size() <= 1) return QPoly{};
    std::vector<Rat> r;
    r.reserve(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.push_back(a.c[i] * Rat(static_cast<long>(i)));
    return QPoly(std::move(r));
}

inline Rat qp_eval(const QPoly& a, const Rat& x) {
    Rat r(0);
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

// Extended gcd: returns g = gcd(a,b) monic with g = u*a + v*b.
inline QPoly qp_xgcd(QPoly a, QPoly b, QPoly& u, QPoly& v) {
    QPoly u0(std::vector<Rat>{Rat(1)}), v0;
    QPoly u1, v1(std::vector<Rat>{Rat(1)});
    while (!b.is_zero()) {
        QPoly q, r;
        qp_divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        QPoly nu = qp_sub(u0, qp_mul(q, u1));
        QPoly nv = qp_sub(v0, qp_mul(q, v1));
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    if (a.is_zero()) {
        u = QPoly{};
        v = QPoly{};
        return a;
    }
    Rat inv_lead = Rat::inv(a.lead());
    u = qp_scale(u0, inv_lead);
    v = qp_scale(v0, inv_lead);
    return qp_scale(a, inv_lead);
}

// Clear denominators and content: primitive integral polynomial with the same
// roots, positive leading coefficient preserved up to sign of input lead.
inline ZPoly qp_primitive(const QPoly& a) {
    if (a.is_zero()) return ZPoly{};
    Int l(1);
    for (const auto& v : a.c) l = Int::lcm(l, v.den());
    std::vector<Int> z;
    z.reserve(a.c.size());
    for (const auto& v : a.c) z.push_back(Int::divexact(l, v.den()) * v.num());
    ZPoly p(std::move(z));
    Int g = zp_content(p);
    if (!g.is_one())
        for (auto& v : p.c) v = Int::divexact(v, g);
    return p;
}

} // namespace ellbound

#endif
