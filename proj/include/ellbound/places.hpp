// Finite places of a number field: splitting of rational primes through the
// factorization of the minimal polynomial mod p (certified by Dedekind's
// index criterion), valuations ord_p normalized by ord_p(p) = e, Sigma_S, and
// the Dedekind-Hensel discriminant inequality.
//
// Primes dividing the index of Z[theta] are reported as indeterminate;
// callers that only need monotone upper bounds may substitute the worst case
// (one place, e = deg, f = 1) via the *_worst_case helpers.
#ifndef ELLBOUND_PLACES_HPP
#define ELLBOUND_PLACES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "ellbound/factor.hpp"
#include "ellbound/numberfield.hpp"

namespace ellbound {

struct FinitePlace {
    FieldRef field;
    Int p;            // rational prime below
    ModPoly local_factor;  // monic irreducible factor of m mod p
    int e = 1;        // ramification index
    int f = 1;        // residue degree
    bool worst_case_proxy = false;  // substituted place at an index-divisible prime

    double log_norm() const { return static_cast<double>(f) * p.log_abs(); }

    friend bool operator==(const FinitePlace& a, const FinitePlace& b) {
        return a.p == b.p && a.local_factor == b.local_factor && a.e == b.e && a.f == b.f;
    }
};

struct PlaceSet {
    FieldRef field;
    std::vector<FinitePlace> places;

    bool contains(const FinitePlace& v) const {
        for (const auto& w : places)
            if (w == v) return true;
        return false;
    }
    void add_unique(FinitePlace v) {
        if (!contains(v)) places.push_back(std::move(v));
    }
};

namespace detail {

// Dedekind's criterion: with m = prod g_i^{e_i} mod p, g* = prod g_i,
// h* = m/g* (mod p), and T = (lift(g*)lift(h*) - m)/p, the prime p does not
// divide [O_K : Z[theta]] iff gcd(T mod p, g*, h*) = 1.
inline bool index_free_at(const ZPoly& m, u64 p, const std::vector<ModFactor>& facs) {
    ModPoly gstar = ModPoly::one(p);
    ModPoly hstar = ModPoly::one(p);
    for (const auto& mf : facs) {
        gstar = mp_mul(gstar, mf.f);
        for (int k = 1; k < mf.mult; ++k) hstar = mp_mul(hstar, mf.f);
    }
    ZPoly g_lift = detail::zp_from_mod(gstar);
    ZPoly h_lift = detail::zp_from_mod(hstar);
    ZPoly prod = zp_mul(g_lift, h_lift);
    std::vector<Int> diff(std::max(prod.c.size(), m.c.size()), Int(0));
    for (size_t i = 0; i < diff.size(); ++i) {
        if (i < prod.c.size()) diff[i] += prod.c[i];
        if (i < m.c.size()) diff[i] -= m.c[i];
    }
    Int P(static_cast<long>(p));
    for (auto& v : diff) v = Int::divexact(v, P);
    ModPoly T = zp_mod(ZPoly(std::move(diff)), p);
    ModPoly g1 = mp_gcd(T, gstar);
    return mp_gcd(g1, hstar).deg() == 0;
}

} // namespace detail

// Factor p in O_K. Throws indeterminate_splitting when p may divide the
// index (Dedekind's criterion fails); then split_prime_worst_case applies.
inline std::vector<FinitePlace> split_prime(const FieldRef& K, const Int& p) {
    if (p <= Int(1) || p.probab_prime() == 0) throw bad_input("split_prime: not a prime: " + p.str());
    if (K->degree() == 1) {
        FinitePlace v{K, p, ModPoly(2, {0, 1}), 1, 1, false};
        if (p.bits() <= 62) v.local_factor = ModPoly(static_cast<u64>(p.to_si()), {0, 1});
        return {v};
    }
    if (p.bits() > 62) throw bad_input("split_prime: prime exceeds 62-bit splitting budget");
    u64 pu = static_cast<u64>(p.to_si());
    ModPoly mp = zp_mod(K->min_poly(), pu);
    auto facs = mp_factor(mp);
    bool squarefree = true;
    for (const auto& mf : facs) squarefree = squarefree && mf.mult == 1;
    if (!squarefree && !detail::index_free_at(K->min_poly(), pu, facs))
        throw indeterminate_splitting("p = " + p.str() + " may divide the index of Z[theta]");
    std::vector<FinitePlace> out;
    int efsum = 0;
    for (const auto& mf : facs) {
        FinitePlace v{K, p, mf.f, mf.mult, mf.f.deg(), false};
        out.push_back(std::move(v));
        efsum += mf.mult * mf.f.deg();
    }
    if (efsum != K->degree()) throw bad_input("splitting lost degree (internal)");
    return out;
}

// Sound stand-in for bound evaluation at an indeterminate prime: a single
// place with e = [K:Q], f = 1.
inline std::vector<FinitePlace> split_prime_worst_case(const FieldRef& K, const Int& p) {
    FinitePlace v{K, p, ModPoly(2, {0, 1}), K->degree(), 1, true};
    if (p.bits() <= 62) {
        u64 pu = static_cast<u64>(p.to_si());
        v.local_factor = zp_mod(K->min_poly(), pu);
    }
    return {v};
}

inline std::vector<FinitePlace> split_prime_or_worst_case(const FieldRef& K, const Int& p) {
    try {
        return split_prime(K, p);
    } catch (const indeterminate_splitting&) {
        return split_prime_worst_case(K, p);
    }
}

// ---- valuations ----

namespace detail {

// polynomial multiplication / remainder with coefficients mod M (balanced not
// needed; nonnegative residues)
inline ZPoly zp_mulmod_int(const ZPoly& a, const ZPoly& b, const Int& M) {
    ZPoly r = zp_mul(a, b);
    for (auto& v : r.c) v = Int::mod_nonneg(v, M);
    r.trim();
    return r;
}

// remainder of a by monic b, coefficients mod M
inline ZPoly zp_rem_monic_mod(ZPoly a, const ZPoly& b, const Int& M) {
    for (auto& v : a.c) v = Int::mod_nonneg(v, M);
    a.trim();
    while (!a.is_zero() && a.deg() >= b.deg()) {
        int k = a.deg() - b.deg();
        Int coef = a.lead();
        for (int i = 0; i <= b.deg(); ++i)
            a.c[i + k] = Int::mod_nonneg(a.c[i + k] - coef * b.c[i], M);
        a.trim();
    }
    return a;
}

// Resultant of monic f and g with coefficients in Z/M (M = p^N). Computed by
// the Sylvester determinant over Z (lifting residues), then reduced: we only
// need its p-adic valuation up to N, which is correct as long as the true
// valuation is < N (guaranteed by the caller's choice of N).
inline Int resultant_mod(const ZPoly& f, const ZPoly& g, const Int& M) {
    ZPoly fl = f, gl = g;
    for (auto& v : fl.c) v = Int::mod_nonneg(v, M);
    for (auto& v : gl.c) v = Int::mod_nonneg(v, M);
    fl.trim();
    gl.trim();
    return Int::mod_nonneg(zp_resultant(f, g), M * M);
}

} // namespace detail

// ord_v(a) with ord_v(p) = e. Exact; needs determinate splitting at v.p.
inline int ord_at(const AlgebraicNumber& a, const FinitePlace& v) {
    if (a.is_zero()) throw zero_argument("ord of zero");
    if (v.worst_case_proxy)
        throw indeterminate_splitting("ord_at on a worst-case proxy place");
    const FieldRef& K = a.field();
    const Int& p = v.p;
    if (K->degree() == 1) {
        Int num = a.rational_value().num(), den = a.rational_value().den();
        int vn = 0, vd = 0;
        if (!num.is_zero()) vn = static_cast<int>(Int::remove_factor(num, p));
        vd = static_cast<int>(Int::remove_factor(den, p));
        return vn - vd;
    }

    // a = A(theta)/den with A integral: ord(a) = ord(A(theta)) - e*v_p(den)
    Int den(1);
    for (const auto& c : a.coords()) den = Int::lcm(den, c.den());
    std::vector<Int> ac;
    ac.reserve(a.coords().size());
    for (const auto& c : a.coords()) ac.push_back(Int::divexact(den, c.den()) * c.num());
    ZPoly A(std::move(ac));
    Int denv = den;
    int vden = static_cast<int>(Int::remove_factor(denv, p));

    // total p-valuation of N(A(theta)) caps every local valuation
    Rat normA = field_norm(AlgebraicNumber(K, [&] {
        std::vector<Rat> c;
        for (const auto& z : A.c) c.emplace_back(z);
        c.resize(K->degree(), Rat(0));
        return c;
    }()));
    Int nn = normA.num();
    int vnorm = nn.is_zero() ? 0 : static_cast<int>(Int::remove_factor(nn, p));

    if (vnorm == 0) return -v.e * vden;  // A(theta) is a p-unit at every place

    // Hensel-lift the block factorization m = prod(g_i^{e_i}) mod p to p^N,
    // then ord at the place of local factor G: v_p(Res(G, A)) / f.
    u64 pu = static_cast<u64>(p.to_si());
    ModPoly mbar = zp_mod(K->min_poly(), pu);
    auto facs = mp_factor(mbar);
    std::vector<ModPoly> blocks;
    int my_block = -1;
    for (const auto& mf : facs) {
        ModPoly blk = mf.f;
        for (int k = 1; k < mf.mult; ++k) blk = mp_mul(blk, mf.f);
        if (mf.f == v.local_factor) my_block = static_cast<int>(blocks.size());
        blocks.push_back(blk);
    }
    if (my_block < 0) throw bad_input("place does not belong to this field/prime");

    int N = vnorm + v.e * K->degree() + 4;
    Int M(static_cast<long>(pu));
    for (int i = 1; i < N; ++i) M *= Int(static_cast<long>(pu));
    std::vector<ZPoly> lifted;
    if (blocks.size() == 1) {
        lifted = {K->min_poly()};
    } else {
        lifted = hensel_lift(K->min_poly(), blocks, pu, M);
        for (auto& g : lifted)
            for (auto& c : g.c) c = Int::mod_nonneg(c, M);
    }
    ZPoly G = lifted[my_block];
    ZPoly Ared = detail::zp_rem_monic_mod(A, G, M);
    if (Ared.is_zero())
        throw precision_unreachable("local precision exhausted in ord_at");
    Int res = Int::mod_nonneg(zp_resultant(G, Ared), M);
    if (res.is_zero()) throw precision_unreachable("resultant vanished mod p^N in ord_at");
    int vres = static_cast<int>(Int::remove_factor(res, p));
    if (vres % v.f != 0) throw bad_input("valuation not divisible by residue degree (internal)");
    return vres / v.f - v.e * vden;
}

// Sigma_S = sum over places of f * log p; |error| <= 2^-40 * |S|.
inline double sigma_S(const PlaceSet& S) {
    double s = 0;
    for (const auto& v : S.places) s += v.log_norm();
    return s;
}

// All places of L above the members of S (a set over K). When K = Q the
// embedding is ignored; otherwise theta_K_in_L must satisfy m_K(theta) = 0.
// Verifies Sigma_S' <= [L:K] * Sigma_S.
inline PlaceSet lift_places(const PlaceSet& S, const FieldRef& L,
                            const AlgebraicNumber* theta_K_in_L = nullptr) {
    const FieldRef& K = S.field;
    if (L->degree() % K->degree() != 0)
        throw bad_input("degree of L is not a multiple of degree of K");
    PlaceSet out{L, {}};
    if (K->degree() > 1 && theta_K_in_L == nullptr)
        throw bad_input("lift_places needs the embedding of K's generator");
    for (const auto& v : S.places) {
        auto above = split_prime(L, v.p);  // throws indeterminate_splitting if unsure
        if (K->degree() == 1) {
            for (auto& w : above) out.add_unique(w);
            continue;
        }
        // w | v  iff  g_v(theta_K) = 0 mod (w.local_factor, p)
        u64 pu = static_cast<u64>(v.p.to_si());
        ModPoly mL = zp_mod(L->min_poly(), pu);
        // theta_K as an integral poly mod p requires p-integral coordinates
        ZPoly psi;
        {
            std::vector<Int> c;
            for (const auto& q : theta_K_in_L->coords()) {
                Int dv = q.den();
                if (dv.divisible_by(v.p))
                    throw indeterminate_splitting("embedding has p in a denominator");
                // q mod p = num * den^-1 mod p
                Int num = Int::mod_nonneg(q.num(), v.p);
                Int den = Int::mod_nonneg(q.den(), v.p);
                u64 inv = invmod(static_cast<u64>(den.to_si()), pu);
                c.push_back(Int(static_cast<long>(mulmod(static_cast<u64>(num.to_si()), inv, pu))));
            }
            psi = ZPoly(std::move(c));
        }
        // G(x) = g_v(psi(x)) mod (m_L, p)
        ModPoly psi_p = zp_mod(psi, pu);
        ModPoly G = ModPoly::zero(pu);
        ModPoly gv = v.local_factor;
        for (int i = gv.deg(); i >= 0; --i) {
            G = mp_mod(mp_mul(G, psi_p), mL);
            G = mp_add(G, ModPoly(pu, {gv.c[i]}));
        }
        for (auto& w : above) {
            if (mp_mod(G, w.local_factor).is_zero()) out.add_unique(w);
        }
    }
    double lhs = sigma_S(out), rhs = static_cast<double>(L->degree() / K->degree()) * sigma_S(S);
    if (lhs > rhs + 1e-9) throw bad_input("Sigma_S' exceeds [L:K]*Sigma_S (internal)");
    return out;
}

// log D_L <= Sigma_S + [L:K](log D_K + 1.26)
inline double dedekind_hensel_bound(double sigma_S_value, int rel_degree, double logD_K) {
    if (sigma_S_value < 0 || logD_K < 0 || rel_degree < 1)
        throw bad_input("dedekind_hensel_bound: nonnegative inputs, rel_degree >= 1");
    return sigma_S_value + static_cast<double>(rel_degree) * (logD_K + 1.26);
}

} // namespace ellbound

#endif
