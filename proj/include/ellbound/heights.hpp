// Absolute logarithmic Weil heights on projective points, the Mahler-measure
// route as an independent oracle for h(1:a), the log+ convention, and the
// radical of a point of P^2 (sum of log norms over primes where the three
// coordinate valuations take at least two distinct values).
#ifndef ELLBOUND_HEIGHTS_HPP
#define ELLBOUND_HEIGHTS_HPP

#include <cmath>
#include <set>

#include "ellbound/embed.hpp"
#include "ellbound/places.hpp"

namespace ellbound {

// log+ x = max{1, log x}, with log+ 0 = 1 by convention.
inline double log_plus(double x) {
    if (x < 0) throw negative_input("log_plus of negative input");
    if (x == 0) return 1.0;
    return std::max(1.0, std::log(x));
}

struct ProjectivePoint {
    FieldRef field;
    std::vector<AlgebraicNumber> coords;

    ProjectivePoint(FieldRef f, std::vector<AlgebraicNumber> cs)
        : field(std::move(f)), coords(std::move(cs)) {
        bool nonzero = false;
        for (const auto& c : coords) {
            if (!c.field()->same_field(*field)) throw field_mismatch("coordinate in wrong field");
            nonzero = nonzero || !c.is_zero();
        }
        if (coords.empty() || !nonzero) throw bad_input("projective point needs a nonzero coordinate");
    }

    static ProjectivePoint rationals(std::vector<Rat> cs) {
        auto Q = NumberField::rationals();
        std::vector<AlgebraicNumber> v;
        v.reserve(cs.size());
        for (auto& r : cs) v.emplace_back(Q, r);
        return ProjectivePoint(Q, std::move(v));
    }
};

struct HeightResult {
    double value = 0;
    double error = 0;  // absolute error bar
    bool exact = false;
};

namespace detail {

// height of a tuple of rationals: scale to coprime integers, log of max |.|
inline HeightResult rational_tuple_height(const std::vector<Rat>& cs) {
    Int l(1), g(0);
    for (const auto& r : cs)
        if (!r.is_zero()) l = Int::lcm(l, r.den());
    std::vector<Int> ints;
    for (const auto& r : cs) ints.push_back(Int::divexact(l, r.den()) * r.num());
    for (const auto& v : ints) g = Int::gcd(g, v);
    Int mx(0);
    for (auto& v : ints) {
        v = Int::divexact(v, g);
        Int av = Int::abs(v);
        if (av > mx) mx = av;
    }
    return {mx.log_abs(), 1e-13, mx.is_one()};
}

struct CoordData {
    ZPoly int_poly;  // den * a as an integral coordinate vector on the power basis
    Int den;
};

// candidate primes where some coordinate has a nonzero valuation
inline std::set<Int> candidate_primes(const std::vector<AlgebraicNumber>& coords,
                                      const FactorBudget& budget) {
    std::set<Int> ps;
    for (const auto& a : coords) {
        if (a.is_zero()) continue;
        Rat n = field_norm(a);
        for (const auto& [p, e] : factorize(n.num(), budget)) ps.insert(p);
        for (const auto& [p, e] : factorize(n.den(), budget)) ps.insert(p);
        for (const auto& c : a.coords())
            if (!c.den().is_one())
                for (const auto& [p, e] : factorize(c.den(), budget)) ps.insert(p);
    }
    return ps;
}

} // namespace detail

// Eq-style absolute height: (1/d) sum_v [K_v:Q_v] log max_i |alpha_i|_v.
// Scaling-invariant; |error| <= 1e-9. Indeterminate splitting at a relevant
// prime is a hard error here (no worst-case substitution in heights).
inline HeightResult weil_height(const ProjectivePoint& P, const FactorBudget& budget = {}) {
    bool all_rational = true;
    for (const auto& a : P.coords) all_rational = all_rational && a.is_rational();
    if (all_rational) {
        std::vector<Rat> rs;
        for (const auto& a : P.coords) rs.push_back(a.coords()[0]);
        return detail::rational_tuple_height(rs);
    }

    const FieldRef& K = P.field;
    const int d = K->degree();

    // finite places
    double fin = 0;
    for (const Int& p : detail::candidate_primes(P.coords, budget)) {
        auto places = split_prime(K, p);  // throws indeterminate_splitting: hard error by contract
        double logp = p.log_abs();
        for (const auto& v : places) {
            int m = 0;
            bool first = true;
            for (const auto& a : P.coords) {
                if (a.is_zero()) continue;
                int o = ord_at(a, v);
                m = first ? o : std::min(m, o);
                first = false;
            }
            fin -= static_cast<double>(v.f) * static_cast<double>(m) * logp;
        }
    }

    // archimedean places: one per root of m, adaptive refinement
    double arch = 0, arch_err = 0;
    for (unsigned bits = 64;; bits *= 2) {
        auto roots = certified_roots(K->min_poly(), bits);
        arch = 0;
        arch_err = 0;
        bool ok = true;
        for (const auto& rb : roots) {
            Rat lo_best(0), hi_best(0);
            for (const auto& a : P.coords) {
                if (a.is_zero()) continue;
                ComplexBox val = eval_coords_box(a.coords(), rb);
                Rat lo, hi;
                val.abs_interval(lo, hi);
                if (lo > lo_best) lo_best = lo;
                if (hi > hi_best) hi_best = hi;
            }
            if (lo_best.sign() <= 0) {
                ok = false;  // interval still touches 0, refine
                break;
            }
            double llo = lo_best.log_abs();
            double lhi = hi_best.log_abs();
            arch += 0.5 * (llo + lhi);
            arch_err += 0.5 * (lhi - llo) + 1e-14;
        }
        if (ok && arch_err < d * 1e-10) break;
        if (bits > 65536u) throw precision_unreachable("archimedean refinement exceeded budget");
    }

    return {(fin + arch) / d, arch_err / d + 1e-12, false};
}

// relative height h_K = [K:Q] h
inline HeightResult relative_height(const ProjectivePoint& P, const FactorBudget& budget = {}) {
    HeightResult h = weil_height(P, budget);
    int d = P.field->degree();
    return {h.value * d, h.error * d, h.exact};
}

inline HeightResult weil_height_1a(const AlgebraicNumber& a, const FactorBudget& budget = {}) {
    AlgebraicNumber one(a.field(), Rat(1));
    return weil_height(ProjectivePoint(a.field(), {one, a}), budget);
}

// Independent route: h(1:a) = (1/deg) log M(P), M the Mahler measure of the
// primitive integral minimal polynomial, roots certified.
inline HeightResult height_via_mahler(const AlgebraicNumber& a) {
    if (a.is_zero()) throw zero_argument("height_via_mahler(0)");
    QPoly mp = minimal_polynomial(a);
    ZPoly prim = qp_primitive(mp);
    const int k = prim.deg();
    double lead = Int::abs(prim.lead()).log_abs();
    if (k == 0) return {0.0, 0.0, true};
    for (unsigned bits = 64;; bits *= 2) {
        auto roots = certified_roots(prim, bits);
        double acc = lead, err = 0;
        bool ok = true;
        for (const auto& rb : roots) {
            Rat lo, hi;
            rb.abs_interval(lo, hi);
            if (hi <= Rat(1)) continue;        // max(1,|root|) = 1, exact
            if (lo < Rat(1)) lo = Rat(1);      // straddles 1: lower clamps
            if (lo.sign() <= 0) {
                ok = false;
                break;
            }
            double llo = lo.log_abs(), lhi = hi.log_abs();
            acc += 0.5 * (llo + lhi);
            err += 0.5 * (lhi - llo) + 1e-14;
        }
        if (ok && err < 1e-10) return {acc / k, err / k + 1e-12, false};
        if (bits > 65536u) throw precision_unreachable("mahler refinement exceeded budget");
    }
}

struct RadicalResult {
    double value = 0;        // Sigma_S over the witness set
    PlaceSet witnesses;      // the places where the three valuations spread
};

// rad_K(a1:a2:a3): all three coordinates nonzero. S_extra contributes extra
// candidate primes (for callers holding pre-factored data).
inline RadicalResult radical(const ProjectivePoint& P, const PlaceSet* S_extra = nullptr,
                             const FactorBudget& budget = {}) {
    if (P.coords.size() != 3) throw bad_input("radical needs a point of P^2");
    for (const auto& a : P.coords)
        if (a.is_zero()) throw zero_element("radical needs nonzero coordinates");

    const FieldRef& K = P.field;
    std::set<Int> cands = detail::candidate_primes(P.coords, budget);
    if (S_extra)
        for (const auto& v : S_extra->places) cands.insert(v.p);

    RadicalResult out;
    out.witnesses.field = K;
    for (const Int& p : cands) {
        for (const auto& v : split_prime(K, p)) {
            int o1 = ord_at(P.coords[0], v);
            int o2 = ord_at(P.coords[1], v);
            int o3 = ord_at(P.coords[2], v);
            if (o1 != o2 || o2 != o3) {
                out.value += v.log_norm();
                out.witnesses.places.push_back(v);
            }
        }
    }
    return out;
}

} // namespace ellbound

#endif
