// Short-Weierstrass curves y^2 = x^3 + Ax + B over a number field: exact
// chord-tangent arithmetic, naive height h_x, the Neron-Tate height as a
// doubling limit, torsion certificates, S-integrality, and a desk-scale
// scanner for S-integral points over Q.
//
// Height normalization: the doubling limit lim 4^-n h_x(2^n Q) is the height
// attached to the divisor 2(O). The default convention x_over_2 halves it
// (divisor (O)); the x convention keeps it. Every consumer records which one
// was in force.
#ifndef ELLBOUND_ELLIPTIC_HPP
#define ELLBOUND_ELLIPTIC_HPP

#include <limits>
#include <memory>
#include <optional>

#include "ellbound/heights.hpp"

namespace ellbound {

enum class HeightNormalization { x_over_2, x };

inline double normalization_factor(HeightNormalization n) {
    return n == HeightNormalization::x_over_2 ? 0.5 : 1.0;
}

inline const char* normalization_name(HeightNormalization n) {
    return n == HeightNormalization::x_over_2 ? "x_over_2" : "x";
}

struct EllipticBudget {
    int n_max = 10;                 // doubling depth cap
    size_t digit_budget = 10000000; // cap on coordinate numerator digits
    int torsion_m_max = 24;
    double torsion_tau = 1e-4;
    double scan_cap_max = 15.0;     // log-scale cap on max(|num|,|den|) of scanned x
};

struct Curve {
    FieldRef field;
    AlgebraicNumber A, B;

    Curve(FieldRef f, AlgebraicNumber a, AlgebraicNumber b)
        : field(std::move(f)), A(std::move(a)), B(std::move(b)) {
        if (!A.field()->same_field(*field) || !B.field()->same_field(*field))
            throw field_mismatch("curve coefficients in wrong field");
        if (field->degree() == 1 &&
            (!A.rational_value().is_integer() || !B.rational_value().is_integer()))
            throw bad_input("curves over Q take integral A, B");
        auto four = AlgebraicNumber(field, Rat(4));
        auto t27 = AlgebraicNumber(field, Rat(27));
        if ((four * A * A * A + t27 * B * B).is_zero())
            throw bad_input("singular curve: 4A^3 + 27B^2 = 0");
    }

    bool same_curve(const Curve& o) const {
        return field->same_field(*o.field) && A == o.A && B == o.B;
    }
};

using CurveRef = std::shared_ptr<const Curve>;

inline CurveRef make_curve(FieldRef f, AlgebraicNumber a, AlgebraicNumber b) {
    return std::make_shared<const Curve>(std::move(f), std::move(a), std::move(b));
}

inline CurveRef make_curve_Q(const Int& a, const Int& b) {
    auto Q = NumberField::rationals();
    return make_curve(Q, AlgebraicNumber(Q, Rat(a)), AlgebraicNumber(Q, Rat(b)));
}

struct CurvePoint {
    CurveRef curve;
    bool infinity = true;
    AlgebraicNumber x, y;

    static CurvePoint at_infinity(CurveRef c) {
        CurvePoint p;
        p.curve = std::move(c);
        p.infinity = true;
        return p;
    }
    static CurvePoint affine(CurveRef c, AlgebraicNumber px, AlgebraicNumber py) {
        CurvePoint p;
        p.curve = std::move(c);
        p.infinity = false;
        p.x = std::move(px);
        p.y = std::move(py);
        if (p.y * p.y != p.x * p.x * p.x + p.curve->A * p.x + p.curve->B)
            throw bad_input("point is not on the curve");
        return p;
    }
    static CurvePoint affine_rational(const CurveRef& c, const Rat& px, const Rat& py) {
        return affine(c, AlgebraicNumber(c->field, px), AlgebraicNumber(c->field, py));
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

inline CurvePoint negate(const CurvePoint& P) {
    if (P.infinity) return P;
    CurvePoint r = P;
    r.y = -P.y;
    return r;
}

// exact chord-tangent addition; all degenerate cases handled
inline CurvePoint group_law(const CurvePoint& P, const CurvePoint& Q) {
    if (!P.curve || !Q.curve) throw bad_input("uninitialized point");
    if (!P.curve->same_curve(*Q.curve)) throw field_mismatch("points on different curves");
    const Curve& E = *P.curve;
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    AlgebraicNumber lambda;
    if (P.x == Q.x) {
        if ((P.y + Q.y).is_zero()) return CurvePoint::at_infinity(P.curve);
        auto three = AlgebraicNumber(E.field, Rat(3));
        auto two = AlgebraicNumber(E.field, Rat(2));
        lambda = (three * P.x * P.x + E.A) / (two * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    AlgebraicNumber x3 = lambda * lambda - P.x - Q.x;
    AlgebraicNumber y3 = lambda * (P.x - x3) - P.y;
    CurvePoint r;
    r.curve = P.curve;
    r.infinity = false;
    r.x = std::move(x3);
    r.y = std::move(y3);
    return r;
}

inline CurvePoint scalar_mul(long n, const CurvePoint& P) {
    if (!P.curve) throw bad_input("uninitialized point");
    if (n == 0) return CurvePoint::at_infinity(P.curve);
    CurvePoint base = n < 0 ? negate(P) : P;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    CurvePoint acc = CurvePoint::at_infinity(P.curve);
    while (k) {
        if (k & 1) acc = group_law(acc, base);
        base = group_law(base, base);
        k >>= 1;
    }
    return acc;
}

// h_x(Q) = h(1 : x(Q)), 0 at O
inline HeightResult h_x(const CurvePoint& Q, const FactorBudget& budget = {}) {
    if (Q.infinity) return {0.0, 0.0, true};
    return weil_height_1a(Q.x, budget);
}

namespace detail {

// x-only duplication over Q on coprime pairs (u : w), A, B integral
struct XFraction {
    Int u, w;  // x = u/w, w > 0, gcd = 1

    void reduce() {
        if (w.sign() < 0) {
            u = -u;
            w = -w;
        }
        Int g = Int::gcd(u, w);
        if (!g.is_one()) {
            u = Int::divexact(u, g);
            w = Int::divexact(w, g);
        }
    }
    double naive_height() const {
        Int mu = Int::abs(u);
        return (mu > w ? mu : w).log_abs();
    }
};

// returns false when the point is 2-torsion (duplication lands at O)
inline bool duplicate_x(XFraction& f, const Int& A, const Int& B, size_t digit_budget) {
    const Int& u = f.u;
    const Int& w = f.w;
    Int u2 = u * u, w2 = w * w;
    Int uw = u * w;
    Int num = u2 * u2 - Int(2) * A * u2 * w2 - Int(8) * B * uw * w2 + A * A * w2 * w2;
    Int den = Int(4) * w * (u * u2 + A * uw * w + B * w * w2);
    if (den.is_zero()) return false;
    if (num.digits() > digit_budget || den.digits() > digit_budget)
        throw coordinate_blowup("duplication exceeded the digit budget");
    f.u = std::move(num);
    f.w = std::move(den);
    f.reduce();
    return true;
}

} // namespace detail

struct CanonicalHeight {
    double value = 0;
    double error = 0;
    int depth = 0;  // doublings actually used
    HeightNormalization normalization = HeightNormalization::x_over_2;
    bool exact_zero = false;  // hit a small multiple of O along the way
};

// Doubling-limit estimate: est_n = c * 4^-n h_x(2^n Q), stop when successive
// estimates differ by < tol/2 and the previous difference was already below
// 4*(tol/2). The second condition rejects single-level flukes where two
// local-height wobbles cancel; it only ever deepens the iteration. Throws
// convergence_failure past n_max and coordinate_blowup past the digit budget.
inline CanonicalHeight canonical_height(const CurvePoint& Q, double tol,
                                        HeightNormalization norm = HeightNormalization::x_over_2,
                                        const EllipticBudget& budget = {},
                                        const FactorBudget& fbudget = {}) {
    if (tol < 1e-8) throw bad_input("canonical_height: tol must be >= 1e-8");
    CanonicalHeight out;
    out.normalization = norm;
    if (Q.infinity) {
        out.exact_zero = true;
        return out;
    }
    const double c = normalization_factor(norm);
    const Curve& E = *Q.curve;

    if (E.field->degree() == 1) {
        detail::XFraction f{Q.x.rational_value().num(), Q.x.rational_value().den()};
        f.reduce();
        Int A = E.A.rational_value().num(), B = E.B.rational_value().num();
        double prev = c * f.naive_height();
        double scale = 1.0;
        double prev_diff = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= budget.n_max; ++n) {
            if (!detail::duplicate_x(f, A, B, budget.digit_budget)) {
                out.exact_zero = true;  // reached 2-torsion: hhat = 0
                out.value = 0;
                out.error = 0;
                out.depth = n;
                return out;
            }
            scale *= 0.25;
            double est = c * scale * f.naive_height();
            double diff = std::abs(est - prev);
            prev = est;
            if (diff < tol / 2 && prev_diff < 2 * tol) {
                out.value = est;
                out.error = (4.0 / 3.0) * std::max(diff, prev_diff / 4) + 1e-12;
                out.depth = n;
                return out;
            }
            prev_diff = diff;
        }
        throw convergence_failure("canonical height did not settle within n_max doublings");
    }

    // general number field: exact doubling through the group law
    CurvePoint R = Q;
    double prev = c * h_x(R, fbudget).value;
    double scale = 1.0;
    double prev_diff = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= budget.n_max; ++n) {
        R = group_law(R, R);
        if (R.infinity) {
            out.exact_zero = true;
            out.value = 0;
            out.error = 0;
            out.depth = n;
            return out;
        }
        for (const auto& cc : R.x.coords())
            if (cc.num().digits() > budget.digit_budget || cc.den().digits() > budget.digit_budget)
                throw coordinate_blowup("doubling exceeded the digit budget");
        scale *= 0.25;
        HeightResult hx = h_x(R, fbudget);
        double est = c * scale * hx.value;
        double diff = std::abs(est - prev);
        prev = est;
        if (diff < tol / 2 && prev_diff < 2 * tol) {
            out.value = est;
            out.error = (4.0 / 3.0) * std::max(diff, prev_diff / 4) + scale * hx.error + 1e-12;
            out.depth = n;
            return out;
        }
        prev_diff = diff;
    }
    throw convergence_failure("canonical height did not settle within n_max doublings");
}

// <P,Q> = (hhat(P+Q) - hhat(P) - hhat(Q)) / 2, error <= 3 tol
inline double nt_pairing(const CurvePoint& P, const CurvePoint& Q, double tol,
                         HeightNormalization norm = HeightNormalization::x_over_2,
                         const EllipticBudget& budget = {}) {
    CurvePoint S = group_law(P, Q);
    double hS = canonical_height(S, tol, norm, budget).value;
    double hP = canonical_height(P, tol, norm, budget).value;
    double hQ = canonical_height(Q, tol, norm, budget).value;
    return 0.5 * (hS - hP - hQ);
}

struct TorsionVerdict {
    enum class Kind { torsion, non_torsion, undecided } kind = Kind::undecided;
    int order_certificate = 0;      // m with [m]Q = O when torsion
    double height_estimate = 0;     // hhat estimate otherwise
    double height_error = 0;
};

inline TorsionVerdict is_torsion(const CurvePoint& Q, const EllipticBudget& budget = {},
                                 HeightNormalization norm = HeightNormalization::x_over_2) {
    TorsionVerdict v;
    if (Q.infinity) {
        v.kind = TorsionVerdict::Kind::torsion;
        v.order_certificate = 1;
        return v;
    }
    CurvePoint R = Q;
    for (int m = 2; m <= budget.torsion_m_max; ++m) {
        R = group_law(R, Q);
        if (R.infinity) {
            v.kind = TorsionVerdict::Kind::torsion;
            v.order_certificate = m;
            return v;
        }
    }
    double tol = std::max(budget.torsion_tau / 8.0, 1e-8);
    try {
        CanonicalHeight h = canonical_height(Q, tol, norm, budget);
        v.height_estimate = h.value;
        v.height_error = h.error;
        if (h.exact_zero) {
            v.kind = TorsionVerdict::Kind::torsion;
            v.order_certificate = 1 << h.depth;
            return v;
        }
        if (h.value - h.error >= budget.torsion_tau) {
            v.kind = TorsionVerdict::Kind::non_torsion;
            return v;
        }
    } catch (const convergence_failure&) {
        // fall through to undecided
    }
    v.kind = TorsionVerdict::Kind::undecided;
    return v;
}

enum class Verdict { yes, no, undecided };

// S-integrality of x(Q): ord_v(x) >= 0 at every finite v outside S.
inline Verdict is_S_integral(const CurvePoint& Q, const PlaceSet& S,
                             const FactorBudget& budget = {}) {
    if (Q.infinity) return Verdict::yes;
    const FieldRef& K = Q.curve->field;
    // negative valuation forces p | denominator of some coordinate
    Int den(1);
    for (const auto& c : Q.x.coords()) den = Int::lcm(den, c.den());
    if (den.is_one()) return Verdict::yes;
    bool undecided = false;
    for (const auto& [p, e] : factorize(den, budget)) {
        std::vector<FinitePlace> places;
        try {
            places = split_prime(K, p);
        } catch (const indeterminate_splitting&) {
            undecided = true;
            continue;
        }
        for (const auto& v : places) {
            if (S.contains(v)) continue;
            if (ord_at(Q.x, v) < 0) return Verdict::no;
        }
    }
    return undecided ? Verdict::undecided : Verdict::yes;
}

// Scan x = u/w with w an S-unit denominator and h(1:x) <= cap; returns the
// points with y >= 0 (the mirror point is implied), sorted by (h_x, x).
inline std::vector<CurvePoint> scan_S_integral_points(const CurveRef& E, const PlaceSet& S,
                                                      double x_height_cap,
                                                      const EllipticBudget& budget = {}) {
    if (E->field->degree() != 1) throw bad_input("scan is a Q-only operation");
    if (x_height_cap > budget.scan_cap_max)
        throw budget_exceeded("x_height_cap above configured scan budget");
    Int A = E->A.rational_value().num(), B = E->B.rational_value().num();
    long H = static_cast<long>(std::floor(std::exp(std::min(x_height_cap, 50.0))));
    if (H < 1) H = 1;

    std::vector<Int> sprimes;
    for (const auto& v : S.places) sprimes.push_back(v.p);
    std::sort(sprimes.begin(), sprimes.end());
    sprimes.erase(std::unique(sprimes.begin(), sprimes.end()), sprimes.end());

    // all S-smooth denominators <= H
    std::vector<Int> denoms{Int(1)};
    for (const auto& p : sprimes) {
        size_t sz = denoms.size();
        for (size_t i = 0; i < sz; ++i) {
            Int v = denoms[i] * p;
            while (v <= Int(H)) {
                denoms.push_back(v);
                v *= p;
            }
        }
    }
    std::sort(denoms.begin(), denoms.end());
    denoms.erase(std::unique(denoms.begin(), denoms.end()), denoms.end());

    std::vector<CurvePoint> found;
    for (const Int& w : denoms) {
        Int w2 = w * w, w3 = w * w * w;
        for (long ui = -H; ui <= H; ++ui) {
            Int u(ui);
            if (!Int::gcd(u, w).is_one()) continue;
            Int z = u * u * u + A * u * w2 + B * w3;
            if (z.sign() < 0) continue;
            Rat y2(z, w3);
            Rat y;
            if (!Rat::sqrt_exact(y2, y)) continue;
            found.push_back(CurvePoint::affine_rational(E, Rat(u, w), y));
        }
    }
    std::sort(found.begin(), found.end(), [](const CurvePoint& a, const CurvePoint& b) {
        Rat xa = a.x.rational_value(), xb = b.x.rational_value();
        Int ma = std::max(Int::abs(xa.num()), xa.den());
        Int mb = std::max(Int::abs(xb.num()), xb.den());
        if (ma != mb) return ma < mb;
        if (xa != xb) return xa < xb;
        return a.y.rational_value() < b.y.rational_value();
    });
    return found;
}

} // namespace ellbound

#endif
