// Dense univariate polynomials over F_p (p a 64-bit prime, degrees stay tiny
// here) with complete factorization: squarefree -> distinct-degree ->
// Cantor-Zassenhaus. Deterministic: the EDF randomness is a fixed-seed LCG and
// factor lists are sorted canonically.
#ifndef ELLBOUND_MODPOLY_HPP
#define ELLBOUND_MODPOLY_HPP

#include <algorithm>
#include <vector>

#include "ellbound/modarith.hpp"

namespace ellbound {

struct ModPoly {
    u64 p = 2;
    std::vector<u64> c;  // low-to-high, no trailing zeros

    ModPoly() = default;
    ModPoly(u64 prime, std::vector<u64> coeffs) : p(prime), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() % p == 0) c.pop_back();
        for (auto& v : c) v %= p;
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    u64 lead() const { return c.back(); }

    static ModPoly zero(u64 p) { return ModPoly(p, {}); }
    static ModPoly one(u64 p) { return ModPoly(p, {1}); }
    static ModPoly x(u64 p) { return ModPoly(p, {0, 1}); }

    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p == b.p && a.c == b.c; }
};

inline ModPoly mp_add(const ModPoly& a, const ModPoly& b) {
    std::vector<u64> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r[i] = addmod(x, y, a.p);
    }
    return ModPoly(a.p, std::move(r));
}

inline ModPoly mp_sub(const ModPoly& a, const ModPoly& b) {
    std::vector<u64> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r[i] = submod(x, y, a.p);
    }
    return ModPoly(a.p, std::move(r));
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.p);
    std::vector<u64> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a.c[i], b.c[j], a.p), a.p);
    return ModPoly(a.p, std::move(r));
}

inline ModPoly mp_scale(const ModPoly& a, u64 k) {
    std::vector<u64> r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = mulmod(a.c[i], k, a.p);
    return ModPoly(a.p, std::move(r));
}

inline void mp_divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
    r = a;
    q = ModPoly::zero(a.p);
    if (b.is_zero() || r.deg() < b.deg()) return;
    std::vector<u64> qc(r.deg() - b.deg() + 1, 0);
    u64 inv_lb = invmod(b.lead(), a.p);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        u64 coef = mulmod(r.lead(), inv_lb, a.p);
        qc[k] = coef;
        for (int i = 0; i <= b.deg(); ++i)
            r.c[i + k] = submod(r.c[i + k], mulmod(coef, b.c[i], a.p), a.p);
        r.trim();
    }
    q = ModPoly(a.p, std::move(qc));
}

inline ModPoly mp_mod(const ModPoly& a, const ModPoly& b) {
    ModPoly q, r;
    mp_divrem(a, b, q, r);
    return r;
}

inline ModPoly mp_monic(const ModPoly& a) {
    if (a.is_zero()) return a;
    return mp_scale(a, invmod(a.lead(), a.p));
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a);
}

inline ModPoly mp_derivative(const ModPoly& a) {
    if (a.c.size() <= 1) return ModPoly::zero(a.p);
    std::vector<u64> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = mulmod(a.c[i], i % a.p, a.p);
    return ModPoly(a.p, std::move(r));
}

inline ModPoly mp_powmod(ModPoly base, u128 e, const ModPoly& f) {
    ModPoly r = ModPoly::one(base.p);
    base = mp_mod(base, f);
    while (e) {
        if (e & 1) r = mp_mod(mp_mul(r, base), f);
        base = mp_mod(mp_mul(base, base), f);
        e >>= 1;
    }
    return r;
}

// p-th root of a polynomial whose nonzero terms all have exponent divisible
// by p (used in squarefree decomposition when derivative vanishes).
inline ModPoly mp_pth_root(const ModPoly& a) {
    std::vector<u64> r;
    for (size_t i = 0; i < a.c.size(); i += a.p) {
        // coefficients of F_p are fixed by Frobenius
        r.push_back(a.c[i]);
    }
    return ModPoly(a.p, std::move(r));
}

struct ModFactor {
    ModPoly f;  // monic irreducible
    int mult = 1;
};

namespace detail {

inline bool mp_less(const ModPoly& a, const ModPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

// Equal-degree splitting of a monic squarefree product of irreducibles of
// degree d. Fixed-seed LCG keeps runs reproducible.
inline void mp_edf(const ModPoly& f, int d, std::vector<ModPoly>& out, u64& state) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    u64 p = f.p;
    int n = f.deg();
    while (true) {
        // random poly of degree < n
        std::vector<u64> rc(n);
        for (int i = 0; i < n; ++i) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            rc[i] = (state >> 11) % p;
        }
        ModPoly a(p, std::move(rc));
        if (a.is_zero()) continue;
        ModPoly g = mp_gcd(a, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            mp_edf(g, d, out, state);
            ModPoly q, r;
            mp_divrem(f, g, q, r);
            mp_edf(q, d, out, state);
            return;
        }
        ModPoly b;
        if (p == 2) {
            // trace map T(a) = a + a^2 + ... + a^(2^(d-1)) mod f
            ModPoly t = a, cur = a;
            for (int i = 1; i < d; ++i) {
                cur = mp_mod(mp_mul(cur, cur), f);
                t = mp_add(t, cur);
            }
            b = t;
        } else {
            u128 e = 1;
            for (int i = 0; i < d; ++i) e *= p;
            b = mp_powmod(a, (e - 1) / 2, f);
            b = mp_sub(b, ModPoly::one(p));
        }
        g = mp_gcd(b, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            mp_edf(g, d, out, state);
            ModPoly q, r;
            mp_divrem(f, g, q, r);
            mp_edf(q, d, out, state);
            return;
        }
    }
}

} // namespace detail

// Full factorization of a nonzero polynomial over F_p into monic irreducibles
// with multiplicities (leading coefficient dropped). Deterministic output.
inline std::vector<ModFactor> mp_factor(const ModPoly& input) {
    std::vector<ModFactor> result;
    ModPoly f = mp_monic(input);
    if (f.deg() <= 0) return result;

    // squarefree decomposition (Yun adapted to char p)
    std::vector<std::pair<ModPoly, int>> sqfree;  // (squarefree part, multiplicity)
    struct Item {
        ModPoly f;
        int mult;
    };
    std::vector<Item> stack{{f, 1}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        ModPoly g = it.f;
        if (g.deg() <= 0) continue;
        ModPoly d = mp_derivative(g);
        if (d.is_zero()) {
            // g = h(x^p) = h(x)^p
            stack.push_back({mp_pth_root(g), it.mult * static_cast<int>(g.p)});
            continue;
        }
        ModPoly c = mp_gcd(g, d);
        ModPoly w, r;
        mp_divrem(g, c, w, r);  // w = squarefree * ...
        int m = it.mult;
        while (w.deg() > 0) {
            ModPoly y = mp_gcd(w, c);
            ModPoly z, r2;
            mp_divrem(w, y, z, r2);
            if (z.deg() > 0) sqfree.push_back({z, m});
            ModPoly cq, cr;
            mp_divrem(c, y, cq, cr);
            c = cq;
            w = y;
            m += it.mult;
        }
        if (c.deg() > 0) stack.push_back({mp_pth_root(c), it.mult * static_cast<int>(c.p)});
    }

    u64 state = 0x9e3779b97f4a7c15ULL ^ input.p;
    for (auto& [sf, mult] : sqfree) {
        // distinct-degree
        ModPoly g = sf;
        ModPoly h = ModPoly::x(g.p);
        int d = 0;
        while (g.deg() > 0) {
            ++d;
            if (2 * d > g.deg()) {
                result.push_back({mp_monic(g), mult});
                break;
            }
            h = mp_powmod(h, g.p, g);
            ModPoly gd = mp_gcd(mp_sub(h, ModPoly::x(g.p)), g);
            if (gd.deg() > 0) {
                std::vector<ModPoly> irr;
                detail::mp_edf(mp_monic(gd), d, irr, state);
                for (auto& q : irr) result.push_back({q, mult});
                ModPoly quo, rem;
                mp_divrem(g, gd, quo, rem);
                g = quo;
                h = mp_mod(h, g);
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.f.deg() != b.f.deg()) return detail::mp_less(a.f, b.f);
        return detail::mp_less(a.f, b.f) || (a.f == b.f && a.mult < b.mult);
    });
    return result;
}

inline bool mp_squarefree(const ModPoly& f) {
    ModPoly d = mp_derivative(f);
    if (d.is_zero()) return f.deg() == 0;
    return mp_gcd(f, d).deg() == 0;
}

} // namespace ellbound

#endif
