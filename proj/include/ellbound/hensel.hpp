// Multifactor linear Hensel lifting and a Zassenhaus-style irreducibility
// test for monic integral polynomials (degree <= 8 in this project, so subset
// recombination is cheap and complete).
#ifndef ELLBOUND_HENSEL_HPP
#define ELLBOUND_HENSEL_HPP

#include <optional>
#include <vector>

#include "ellbound/poly.hpp"

namespace ellbound {

namespace detail {

inline ZPoly zp_from_mod(const ModPoly& a) {
    std::vector<Int> c;
    c.reserve(a.c.size());
    for (u64 v : a.c) c.emplace_back(static_cast<long>(v));
    return ZPoly(std::move(c));
}

inline ZPoly zp_reduce_balanced(const ZPoly& a, const Int& M) {
    Int half = M / Int(2);
    std::vector<Int> c(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) {
        Int v = Int::mod_nonneg(a.c[i], M);
        if (v > half) v -= M;
        c[i] = v;
    }
    return ZPoly(std::move(c));
}

inline ZPoly zp_mul_mod(const ZPoly& a, const ZPoly& b, const Int& M) {
    return zp_reduce_balanced(zp_mul(a, b), M);
}

// Exact division in Z[x] by a monic divisor; nullopt if it does not divide.
inline std::optional<ZPoly> zp_divide_monic(const ZPoly& f, const ZPoly& g) {
    if (g.is_zero() || !g.lead().is_one()) return std::nullopt;
    ZPoly r = f;
    if (r.deg() < g.deg()) return std::nullopt;
    std::vector<Int> q(r.deg() - g.deg() + 1, Int(0));
    while (!r.is_zero() && r.deg() >= g.deg()) {
        int k = r.deg() - g.deg();
        Int coef = r.lead();
        q[k] = coef;
        for (int i = 0; i <= g.deg(); ++i) r.c[i + k] -= coef * g.c[i];
        r.trim();
    }
    if (!r.is_zero()) return std::nullopt;
    return ZPoly(std::move(q));
}

} // namespace detail

// Lift a pairwise-coprime monic factorization f = prod(g_i) (mod p) to
// (mod p^iters_target) by linear steps. f monic integral.
inline std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors_p,
                                      u64 p, const Int& target_modulus) {
    const u64 prime = p;
    std::vector<ZPoly> fs;
    fs.reserve(factors_p.size());
    for (const auto& g : factors_p) fs.push_back(detail::zp_from_mod(mp_monic(g)));
    if (fs.size() == 1) {
        // f itself is the lift
        return {f};
    }

    // Bezout data mod p: b_i = (prod_{j!=i} g_j)^-1 mod g_i
    std::vector<ModPoly> bez;
    for (size_t i = 0; i < factors_p.size(); ++i) {
        ModPoly prod = ModPoly::one(prime);
        for (size_t j = 0; j < factors_p.size(); ++j)
            if (j != i) prod = mp_mod(mp_mul(prod, factors_p[j]), factors_p[i]);
        // invert prod mod g_i via extended Euclid in F_p[x]
        ModPoly a = factors_p[i], b = prod;
        ModPoly u0 = ModPoly::zero(prime), u1 = ModPoly::one(prime);
        while (!b.is_zero()) {
            ModPoly q, r;
            mp_divrem(a, b, q, r);
            a = b;
            b = r;
            ModPoly nu = mp_sub(u0, mp_mul(q, u1));
            u0 = u1;
            u1 = nu;
        }
        // a = gcd = constant (coprime); scale u0 by 1/a
        ModPoly inv = mp_scale(mp_mod(u0, factors_p[i]), invmod(a.c[0], prime));
        bez.push_back(inv);
    }

    Int M(static_cast<long>(prime));
    Int P(static_cast<long>(prime));
    while (M < target_modulus) {
        // e = (f - prod fs) / M mod p
        ZPoly prod(std::vector<Int>{Int(1)});
        for (const auto& g : fs) prod = zp_mul(prod, g);
        ZPoly err;
        {
            std::vector<Int> d(std::max(f.c.size(), prod.c.size()), Int(0));
            for (size_t i = 0; i < d.size(); ++i) {
                if (i < f.c.size()) d[i] += f.c[i];
                if (i < prod.c.size()) d[i] -= prod.c[i];
            }
            for (auto& v : d) v = Int::divexact(v, M);
            err = ZPoly(std::move(d));
        }
        ModPoly e_p = zp_mod(err, prime);
        for (size_t i = 0; i < fs.size(); ++i) {
            ModPoly delta = mp_mod(mp_mul(e_p, bez[i]), factors_p[i]);
            ZPoly dz = detail::zp_from_mod(delta);
            // fs[i] += M * delta
            if (dz.c.size() > fs[i].c.size()) fs[i].c.resize(dz.c.size(), Int(0));
            for (size_t k = 0; k < dz.c.size(); ++k) fs[i].c[k] += M * dz.c[k];
            fs[i].trim();
        }
        M *= P;
    }
    for (auto& g : fs) g = detail::zp_reduce_balanced(g, M);
    // keep monic representatives (lift preserves monicity: delta deg < deg g)
    return fs;
}

struct IrreducibilityReport {
    bool irreducible = false;
    ZPoly witness_factor;  // a nontrivial monic factor when reducible
    u64 certifying_prime = 0;  // factorization stayed irreducible mod this p
};

// Complete irreducibility decision for monic integral f, deg f >= 1.
inline IrreducibilityReport irreducible_over_Q(const ZPoly& f) {
    IrreducibilityReport rep;
    int n = f.deg();
    if (n <= 0) throw bad_input("irreducibility of a constant");
    if (n == 1) {
        rep.irreducible = true;
        return rep;
    }
    // squarefree over Q?
    QPoly g = qp_gcd(QPoly(f), QPoly(zp_derivative(f)));
    if (g.deg() > 0) {
        ZPoly w = qp_primitive(g);
        if (!w.lead().is_one()) throw bad_input("unexpected non-monic gcd");
        rep.witness_factor = w;
        return rep;
    }
    // integer roots (monic: rational roots are integers dividing c0)
    if (!f.c[0].is_zero()) {
        Int c0 = Int::abs(f.c[0]);
        if (c0.bits() <= 40) {
            long bound = c0.to_si();
            for (long d = 1; static_cast<long long>(d) * d <= bound; ++d) {
                if (bound % d != 0) continue;
                for (long root : {d, -d, bound / d, -(bound / d)}) {
                    if (zp_eval(f, Int(root)).is_zero()) {
                        rep.witness_factor = ZPoly(std::vector<Int>{Int(-root), Int(1)});
                        return rep;
                    }
                }
            }
        }
    } else {
        rep.witness_factor = ZPoly(std::vector<Int>{Int(0), Int(1)});
        return rep;
    }

    static const u64 kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    u64 p = 0;
    std::vector<ModFactor> facs;
    for (u64 cand : kPrimes) {
        ModPoly fp = zp_mod(f, cand);
        if (fp.deg() != n) continue;  // cannot happen for monic, kept for safety
        if (!mp_squarefree(fp)) continue;
        facs = mp_factor(fp);
        p = cand;
        break;
    }
    if (p == 0) {
        // extremely smooth discriminant; walk odd numbers upward
        for (u64 cand = 101;; cand += 2) {
            if (!is_prime_u64(cand)) continue;
            ModPoly fp = zp_mod(f, cand);
            if (mp_squarefree(fp)) {
                facs = mp_factor(fp);
                p = cand;
                break;
            }
        }
    }
    if (facs.size() == 1) {
        rep.irreducible = true;
        rep.certifying_prime = p;
        return rep;
    }

    // Mignotte-style bound: any monic factor of f has |coeff| <= 2^n * ||f||_2
    Int norm2(0);
    for (const auto& v : f.c) norm2 += v * v;
    Int B = (Int::isqrt(norm2) + Int(1)) << static_cast<unsigned long>(n);
    Int target = (B << 1) + Int(1);
    Int M(static_cast<long>(p));
    while (M < target) M *= Int(static_cast<long>(p));

    std::vector<ModPoly> base;
    base.reserve(facs.size());
    for (const auto& mf : facs) base.push_back(mf.f);
    std::vector<ZPoly> lifted = hensel_lift(f, base, p, M);

    // If f = g*h nontrivially, one factor has degree <= n/2 and equals a
    // subset product of the lifted factors (balanced residues, Mignotte).
    size_t r = lifted.size();
    for (u64 mask = 1; mask + 1 < (1ULL << r); ++mask) {
        int degsum = 0;
        for (size_t i = 0; i < r; ++i)
            if (mask & (1ULL << i)) degsum += lifted[i].deg();
        if (degsum < 1 || degsum > n / 2) continue;
        ZPoly cand(std::vector<Int>{Int(1)});
        for (size_t i = 0; i < r; ++i)
            if (mask & (1ULL << i)) cand = detail::zp_mul_mod(cand, lifted[i], M);
        cand = detail::zp_reduce_balanced(cand, M);
        if (!cand.lead().is_one()) continue;
        if (detail::zp_divide_monic(f, cand)) {
            rep.witness_factor = cand;
            return rep;
        }
    }
    rep.irreducible = true;
    rep.certifying_prime = p;
    return rep;
}

} // namespace ellbound

#endif
