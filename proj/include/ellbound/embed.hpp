// Certified complex embeddings. Approximate roots of the minimal polynomial
// come from a double-precision Durand-Kerner sweep; certification is exact:
// with W_i = m(z_i) / prod_{j!=i}(z_i - z_j), the disks D(z_i, n|W_i|)
// jointly contain all roots and, when pairwise disjoint, each contains
// exactly one. Radii are rational upper bounds, so containment is rigorous.
// Refinement repeats the Weierstrass step in dyadic rationals.
#ifndef ELLBOUND_EMBED_HPP
#define ELLBOUND_EMBED_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "ellbound/numberfield.hpp"

namespace ellbound {

struct ComplexRat {
    Rat re, im;

    ComplexRat() = default;
    ComplexRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    friend ComplexRat operator+(const ComplexRat& a, const ComplexRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRat operator-(const ComplexRat& a, const ComplexRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRat operator*(const ComplexRat& a, const ComplexRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Rat norm2() const { return re * re + im * im; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline ComplexRat cr_div(const ComplexRat& a, const ComplexRat& b) {
    Rat n2 = b.norm2();
    if (n2.is_zero()) throw division_by_zero("complex division by zero");
    ComplexRat conj{b.re, -b.im};
    ComplexRat num = a * conj;
    Rat inv = Rat::inv(n2);
    return {num.re * inv, num.im * inv};
}

// exact dyadic value of a finite double
inline Rat rat_from_double(double x) {
    if (x == 0.0) return Rat(0);
    int e = 0;
    double mant = std::frexp(x, &e);
    long long mi = static_cast<long long>(std::ldexp(mant, 53));
    int sh = e - 53;
    if (sh >= 0) return Rat(Int(mi) << static_cast<unsigned long>(sh));
    return Rat(Int(mi), Int::pow2(static_cast<unsigned long>(-sh)));
}

// round to a dyadic with ~bits significant bits (keeps Newton iterates small)
inline Rat round_dyadic(const Rat& x, unsigned bits) {
    if (x.is_zero()) return x;
    Int scaled = Int::fdiv_q(x.num() << bits, x.den());
    return Rat(scaled, Int::pow2(bits));
}

inline ComplexRat round_dyadic(const ComplexRat& z, unsigned bits) {
    return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
}

// |z| enclosure via exact norm2 and dyadic sqrt
inline void abs_bounds(const ComplexRat& z, unsigned bits, Rat& lo, Rat& hi) {
    sqrt_bounds(z.norm2(), bits, lo, hi);
}

struct ComplexBox {
    ComplexRat center;
    Rat radius;  // rational upper bound; 0 means exact

    // |value| interval for any point in the disk
    void abs_interval(Rat& lo, Rat& hi, unsigned bits = 96) const {
        Rat clo, chi;
        abs_bounds(center, bits, clo, chi);
        lo = clo - radius;
        if (lo.sign() < 0) lo = Rat(0);
        hi = chi + radius;
    }
    double width() const { return (radius + radius).to_double(); }
};

// disk arithmetic (centers exact, radii outward-rounded where sqrt appears)
inline ComplexBox box_add(const ComplexBox& a, const ComplexBox& b) {
    return {a.center + b.center, a.radius + b.radius};
}
inline ComplexBox box_mul(const ComplexBox& a, const ComplexBox& b, unsigned bits = 96) {
    Rat alo, ahi, blo, bhi;
    abs_bounds(a.center, bits, alo, ahi);
    abs_bounds(b.center, bits, blo, bhi);
    return {a.center * b.center, ahi * b.radius + bhi * a.radius + a.radius * b.radius};
}
inline ComplexBox box_scale(const ComplexBox& a, const Rat& q) {
    return {{a.center.re * q, a.center.im * q}, a.radius * Rat::abs(q)};
}

namespace detail {

inline ComplexRat eval_cr(const ZPoly& p, const ComplexRat& z) {
    ComplexRat r{Rat(0), Rat(0)};
    for (size_t i = p.c.size(); i-- > 0;) r = r * z + ComplexRat{Rat(p.c[i]), Rat(0)};
    return r;
}

// one exact Weierstrass correction; nullopt when two approximations collide
inline bool weierstrass_radii(const ZPoly& m, const std::vector<ComplexRat>& z,
                              std::vector<ComplexRat>& corr, std::vector<Rat>& radius,
                              unsigned bits) {
    const int n = m.deg();
    corr.resize(n);
    radius.resize(n);
    for (int i = 0; i < n; ++i) {
        ComplexRat denom{Rat(m.lead()), Rat(0)};
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            denom = denom * (z[i] - z[j]);
        }
        if (denom.is_zero()) return false;
        corr[i] = cr_div(eval_cr(m, z[i]), denom);
        Rat lo, hi;
        abs_bounds(corr[i], bits, lo, hi);
        radius[i] = hi * Rat(n);
    }
    return true;
}

inline bool disks_disjoint(const std::vector<ComplexRat>& z, const std::vector<Rat>& r) {
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j) {
            Rat d2 = (z[i] - z[j]).norm2();
            Rat rr = r[i] + r[j];
            if (d2 <= rr * rr) return false;
        }
    return true;
}

} // namespace detail

// Certified boxes, one per root of the monic integral minimal polynomial.
// Widths <= 2^-precision_bits. Order: sorted by (re, im) of the centers,
// deterministic.
inline std::vector<ComplexBox> certified_roots(const ZPoly& m, unsigned precision_bits) {
    const int n = m.deg();
    if (n < 1) throw bad_input("roots of a constant");
    if (n == 1) {
        // single rational root -c0/c1, exact
        ComplexBox b{{Rat(-m.c[0]) / Rat(m.c[1]), Rat(0)}, Rat(0)};
        return {b};
    }
    // double-precision Durand-Kerner
    double cauchy = 0;
    double lead = std::abs(m.lead().to_double());
    for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(m.c[i].to_double()) / lead);
    double R = 1.0 + cauchy;
    std::vector<std::complex<double>> zd(n);
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * 3.141592653589793 * (i + 0.25) / n;
        zd[i] = std::polar(R * 0.7 + 0.3, ang);
    }
    auto eval_d = [&](std::complex<double> x) {
        std::complex<double> r = 0;
        for (size_t i = m.c.size(); i-- > 0;) r = r * x + m.c[i].to_double();
        return r;
    };
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = m.lead().to_double();
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= zd[i] - zd[j];
            std::complex<double> w = eval_d(zd[i]) / denom;
            zd[i] -= w;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < 1e-14) break;
    }

    // exact refinement + certification
    const unsigned target_bits = std::max(precision_bits + 4, 60u);
    unsigned wp = std::max(2 * target_bits, 120u);
    std::vector<ComplexRat> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = ComplexRat{rat_from_double(zd[i].real()), rat_from_double(zd[i].imag())};
    Rat target(Int(1), Int::pow2(precision_bits + 1));  // radius target: half width
    std::vector<ComplexRat> corr;
    std::vector<Rat> radius;
    for (int round = 0; round < 80; ++round) {
        if (!detail::weierstrass_radii(m, z, corr, radius, wp)) {
            // collision: nudge apart deterministically
            for (int i = 0; i < n; ++i)
                z[i].re += Rat(Int(i + 1), Int::pow2(40));
            continue;
        }
        bool done = detail::disks_disjoint(z, radius);
        if (done)
            for (const auto& r : radius) done = done && r <= target;
        if (done) {
            std::vector<ComplexBox> out(n);
            for (int i = 0; i < n; ++i) out[i] = ComplexBox{z[i], radius[i]};
            std::sort(out.begin(), out.end(), [](const ComplexBox& a, const ComplexBox& b) {
                if (a.center.re != b.center.re) return a.center.re < b.center.re;
                return a.center.im < b.center.im;
            });
            return out;
        }
        for (int i = 0; i < n; ++i) z[i] = round_dyadic(z[i] - corr[i], wp);
        wp += target_bits / 2 + 16;
        if (wp > 64 * (precision_bits + 64))
            break;
    }
    throw precision_unreachable("root refinement stalled (ill-conditioned minimal polynomial)");
}

// One certified box per embedding sigma: K -> C, containing sigma(a).
// Adaptive: root precision grows until each box is narrower than
// 2^-precision_bits.
inline std::vector<ComplexBox> embed_complex(const AlgebraicNumber& a, unsigned precision_bits) {
    if (precision_bits < 32) precision_bits = 32;
    const auto& K = *a.field();
    if (K.degree() == 1 || a.is_rational()) {
        int n = K.degree();
        std::vector<ComplexBox> out(n, ComplexBox{{a.coords()[0], Rat(0)}, Rat(0)});
        return out;
    }
    Rat target(Int(1), Int::pow2(precision_bits));
    for (unsigned bits = precision_bits + 8;; bits = bits * 2) {
        auto roots = certified_roots(K.min_poly(), bits);
        std::vector<ComplexBox> out;
        out.reserve(roots.size());
        bool ok = true;
        for (const auto& rb : roots) {
            // Horner in disk arithmetic
            ComplexBox acc{{Rat(0), Rat(0)}, Rat(0)};
            for (size_t i = a.coords().size(); i-- > 0;) {
                acc = box_mul(acc, rb);
                acc = box_add(acc, ComplexBox{{a.coords()[i], Rat(0)}, Rat(0)});
            }
            if (acc.radius + acc.radius > target) {
                ok = false;
                break;
            }
            out.push_back(acc);
        }
        if (ok) return out;
        if (bits > 65536u) throw precision_unreachable("embedding refinement exceeded budget");
    }
}

// spec surface name: certified intervals for all embeddings of a
inline std::vector<ComplexBox> embed_real_intervals(const AlgebraicNumber& a,
                                                    unsigned precision_bits) {
    return embed_complex(a, precision_bits);
}

// Horner evaluation of a coordinate vector at a certified root box.
inline ComplexBox eval_coords_box(const std::vector<Rat>& coords, const ComplexBox& root) {
    ComplexBox acc{{Rat(0), Rat(0)}, Rat(0)};
    for (size_t i = coords.size(); i-- > 0;) {
        acc = box_mul(acc, root);
        acc = box_add(acc, ComplexBox{{coords[i], Rat(0)}, Rat(0)});
    }
    return acc;
}

} // namespace ellbound

#endif
