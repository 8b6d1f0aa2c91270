// Mordell-Weil lattice quantities: Gram matrix of the Neron-Tate pairing,
// regulator with a propagated error bar, the Minkowski successive-minima
// inequality prod hhat(Q_i) <= (r!)^4 Reg, Masser's height floor, and the
// regulator rearrangement of the BSD leading-coefficient formula.
//
// Generators are user inputs and must be independent: the Gram matrix is
// required positive definite (checked two ways, leading minors and LDL^T
// pivots, on the exact rational images of the computed entries).
#ifndef ELLBOUND_MWLATTICE_HPP
#define ELLBOUND_MWLATTICE_HPP

#include "ellbound/elliptic.hpp"

namespace ellbound {

struct MWBasis {
    CurveRef curve;
    std::vector<CurvePoint> generators;
    std::vector<double> heights;               // hhat(Q_i)
    std::vector<std::vector<double>> gram;     // <Q_i, Q_j>
    double entry_error = 0;                    // per-entry absolute bound
    HeightNormalization normalization = HeightNormalization::x_over_2;

    int rank() const { return static_cast<int>(generators.size()); }
};

namespace detail {

inline std::vector<std::vector<Rat>> to_rational(const std::vector<std::vector<double>>& m) {
    std::vector<std::vector<Rat>> r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) r[i].push_back(rat_from_double(m[i][j]));
    return r;
}

inline Rat leading_minor(const std::vector<std::vector<Rat>>& m, size_t k) {
    std::vector<std::vector<Rat>> sub(k);
    for (size_t i = 0; i < k; ++i) sub[i].assign(m[i].begin(), m[i].begin() + k);
    return det_rational(std::move(sub));
}

// Positive-definiteness two ways (leading minors and LDL^T pivots; they must
// agree on signs). Certification additionally demands each k x k minor clear
// its propagated error bound k! max^(k-1) k entry_error: a minor inside the
// noise band cannot certify independent generators.
inline bool positive_definite(const std::vector<std::vector<double>>& gram, double entry_error) {
    auto m = to_rational(gram);
    const size_t r = m.size();
    double mx = 0;
    for (const auto& row : gram)
        for (double v : row) mx = std::max(mx, std::abs(v));
    bool minors_ok = true, certified = true;
    double fact = 1;
    for (size_t k = 1; k <= r; ++k) {
        fact *= static_cast<double>(k);
        Rat minor = leading_minor(m, k);
        if (minor.sign() <= 0) minors_ok = false;
        double err_k = fact * std::pow(std::max(mx, 1.0), static_cast<double>(k - 1)) *
                       static_cast<double>(k) * entry_error;
        if (minor.to_double() <= err_k) certified = false;
    }
    // LDL^T with rational pivots
    bool ldl_ok = true;
    std::vector<std::vector<Rat>> a = m;
    for (size_t k = 0; k < r && ldl_ok; ++k) {
        if (a[k][k].sign() <= 0) {
            ldl_ok = false;
            break;
        }
        for (size_t i = k + 1; i < r; ++i) {
            Rat f = a[i][k] / a[k][k];
            for (size_t j = k; j < r; ++j) a[i][j] -= f * a[k][j];
        }
    }
    if (minors_ok != ldl_ok) throw bad_input("PD checks disagree (internal)");
    return minors_ok && certified;
}

} // namespace detail

// Heights and Gram from the doubling-limit height at tolerance tol. Pairing
// entries carry error <= 3 tol (three canonical heights each).
inline MWBasis make_basis(CurveRef curve, std::vector<CurvePoint> generators, double tol,
                          HeightNormalization norm = HeightNormalization::x_over_2,
                          const EllipticBudget& budget = {}) {
    MWBasis b;
    b.curve = std::move(curve);
    b.generators = std::move(generators);
    b.normalization = norm;
    b.entry_error = 3 * tol;
    const int r = b.rank();
    b.heights.resize(r);
    b.gram.assign(r, std::vector<double>(r, 0.0));
    std::vector<CanonicalHeight> hs(r);
    for (int i = 0; i < r; ++i) {
        if (b.generators[i].infinity) throw not_positive_definite("O declared as a generator");
        hs[i] = canonical_height(b.generators[i], tol, norm, budget);
        b.heights[i] = hs[i].value;
        b.gram[i][i] = hs[i].value;
    }
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            CurvePoint s = group_law(b.generators[i], b.generators[j]);
            double hsum = canonical_height(s, tol, norm, budget).value;
            double v = 0.5 * (hsum - b.heights[i] - b.heights[j]);
            b.gram[i][j] = b.gram[j][i] = v;
        }
    }
    if (r > 0 && !detail::positive_definite(b.gram))
        throw not_positive_definite("Gram matrix is not positive definite: dependent or torsion generators");
    return b;
}

// reorder so heights are nondecreasing (the Minkowski basis ordering)
inline MWBasis minkowski_sort(MWBasis b) {
    const int r = b.rank();
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (b.heights[i] != b.heights[j]) return b.heights[i] < b.heights[j];
        return i < j;
    });
    MWBasis out = b;
    for (int i = 0; i < r; ++i) {
        out.generators[i] = b.generators[idx[i]];
        out.heights[i] = b.heights[idx[i]];
        for (int j = 0; j < r; ++j) out.gram[i][j] = b.gram[idx[i]][idx[j]];
    }
    return out;
}

struct RegulatorResult {
    double value = 1.0;
    double error = 0.0;  // r! * max^(r-1) * r * entry_error
};

// Reg = det(Gram); empty determinant is 1 by convention.
inline RegulatorResult regulator(const MWBasis& b) {
    const int r = b.rank();
    if (r == 0) return {1.0, 0.0};
    if (!detail::positive_definite(b.gram))
        throw not_positive_definite("Gram matrix is not positive definite");
    auto m = detail::to_rational(b.gram);
    double det = detail::det_rational(std::move(m)).to_double();
    double mx = 0;
    for (const auto& row : b.gram)
        for (double v : row) mx = std::max(mx, std::abs(v));
    double fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    double err = fact * std::pow(std::max(mx, 1.0), r - 1) * r * b.entry_error;
    return {det, err};
}

struct MinkowskiReport {
    double product = 0;        // prod hhat(Q_i)
    double product_error = 0;
    double rhs = 0;            // (r!)^4 * Reg
    double rhs_error = 0;
    bool holds = false;        // with error bars: product_hi <= rhs_lo
    bool bars_straddle = false;
    double slack = 0;          // rhs / product
};

inline MinkowskiReport minkowski_check(const MWBasis& b) {
    const int r = b.rank();
    if (r < 1) throw bad_input("minkowski_check needs rank >= 1");
    MinkowskiReport rep;
    double lo = 1, hi = 1, mid = 1;
    for (double h : b.heights) {
        mid *= h;
        lo *= std::max(h - b.entry_error, 0.0);
        hi *= h + b.entry_error;
    }
    rep.product = mid;
    rep.product_error = std::max(hi - mid, mid - lo);
    RegulatorResult reg = regulator(b);
    double fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    double f4 = std::pow(fact, 4);
    rep.rhs = f4 * reg.value;
    rep.rhs_error = f4 * reg.error;
    rep.holds = hi <= rep.rhs - rep.rhs_error;
    rep.bars_straddle = !rep.holds && lo <= rep.rhs + rep.rhs_error;
    rep.slack = rep.rhs / rep.product;
    return rep;
}

// Masser's floor: hhat(Q) >= kappa4 / (d^3 (log d)^2) for non-torsion Q over
// an extension of degree d >= 2.
inline double masser_floor(int d, double kappa4) {
    if (d < 2) throw domain_error("masser_floor needs d >= 2");
    if (!(kappa4 > 0 && kappa4 < 1)) throw domain_error("masser_floor needs 0 < kappa4 < 1");
    double ld = std::log(static_cast<double>(d));
    return kappa4 / (static_cast<double>(d) * d * d * ld * ld);
}

// Reg = L* tors^2 sqrt(D_K) / (Sha c_inf prod c_v): the exact rearrangement
// of the leading-coefficient formula.
inline double regulator_from_bsd(double L_star, long sha, long torsion_order, double c_inf,
                                 double prod_cv, double D_K) {
    if (!(L_star > 0) || sha <= 0 || torsion_order <= 0 || !(c_inf > 0) || !(prod_cv > 0) ||
        !(D_K > 0))
        throw domain_error("regulator_from_bsd needs positive inputs");
    double t = static_cast<double>(torsion_order);
    return L_star * t * t * std::sqrt(D_K) / (static_cast<double>(sha) * c_inf * prod_cv);
}

} // namespace ellbound

#endif
