// Number fields presented as Q[t]/(m(t)) with m monic integral irreducible of
// degree <= 8, and their elements as rational coordinate vectors on the power
// basis 1, t, ..., t^(d-1). All arithmetic is exact.
#ifndef ELLBOUND_NUMBERFIELD_HPP
#define ELLBOUND_NUMBERFIELD_HPP

#include <memory>
#include <vector>

#include "ellbound/hensel.hpp"
#include "ellbound/poly.hpp"

namespace ellbound {

inline constexpr int kMaxFieldDegree = 8;

class NumberField;
using FieldRef = std::shared_ptr<const NumberField>;

class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    // Verifies monic, integral, irreducible; computes the polynomial
    // discriminant (the D_K proxy; see poly_disc()).
    static FieldRef make(ZPoly min_poly) {
        return FieldRef(new NumberField(std::move(min_poly)));
    }
    static FieldRef rationals() {
        static FieldRef q = make(ZPoly(std::vector<Int>{Int(0), Int(1)}));
        return q;
    }

    const ZPoly& min_poly() const { return m_; }
    const QPoly& min_poly_q() const { return mq_; }
    int degree() const { return deg_; }
    // |disc(m)| >= D_K; every bound downstream is nondecreasing in D_K, so
    // this proxy is sound. Degree-1 fields report 1.
    const Int& poly_disc() const { return disc_; }
    bool is_rationals() const { return deg_ == 1; }

    bool same_field(const NumberField& o) const { return this == &o || m_ == o.m_; }

  private:
    explicit NumberField(ZPoly min_poly) : m_(std::move(min_poly)) {
        deg_ = m_.deg();
        if (deg_ < 1 || deg_ > kMaxFieldDegree)
            throw bad_input("min_poly degree must be in [1, 8]");
        if (!m_.monic()) throw bad_input("min_poly must be monic");
        if (deg_ > 1) {
            auto rep = irreducible_over_Q(m_);
            if (!rep.irreducible)
                throw reducible_polynomial("min_poly is reducible; factor: witness of degree " +
                                           std::to_string(rep.witness_factor.deg()));
        }
        disc_ = deg_ == 1 ? Int(1) : Int::abs(zp_discriminant(m_));
        if (disc_.is_zero()) throw bad_input("zero discriminant");
        mq_ = QPoly(m_);
    }

    ZPoly m_;
    QPoly mq_;
    int deg_ = 0;
    Int disc_;
};

class AlgebraicNumber {
  public:
    AlgebraicNumber() : field_(NumberField::rationals()), coords_(1, Rat(0)) {}
    AlgebraicNumber(FieldRef field, std::vector<Rat> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) > field_->degree())
            throw bad_input("coordinate vector longer than field degree");
        coords_.resize(field_->degree(), Rat(0));
    }
    AlgebraicNumber(FieldRef field, const Rat& scalar) : field_(std::move(field)) {
        coords_.assign(field_->degree(), Rat(0));
        coords_[0] = scalar;
    }
    static AlgebraicNumber generator(FieldRef field) {
        std::vector<Rat> c(field->degree(), Rat(0));
        if (field->degree() == 1) {
            // Q[t]/(t - a): the generator is the rational root itself
            c[0] = -Rat(field->min_poly().c[0]);
        } else {
            c[1] = Rat(1);
        }
        return AlgebraicNumber(std::move(field), std::move(c));
    }

    const FieldRef& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    int degree_bound() const { return field_->degree(); }

    bool is_zero() const {
        for (const auto& v : coords_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (!coords_[i].is_zero()) return false;
        return true;
    }
    // valid only when is_rational()
    const Rat& rational_value() const { return coords_[0]; }

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a.field_->same_field(*b.field_) && a.coords_ == b.coords_;
    }
    friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

  private:
    FieldRef field_;
    std::vector<Rat> coords_;  // on 1, t, ..., t^(d-1)
};

namespace detail {

inline void check_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!a.field()->same_field(*b.field()))
        throw field_mismatch("operands live in different number fields");
}

inline QPoly to_poly(const AlgebraicNumber& a) {
    return QPoly(a.coords());
}

inline AlgebraicNumber from_poly(const FieldRef& f, const QPoly& p) {
    QPoly r = qp_mod(p, f->min_poly_q());
    std::vector<Rat> c = r.c;
    c.resize(f->degree(), Rat(0));
    return AlgebraicNumber(f, std::move(c));
}

} // namespace detail

inline AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    detail::check_same_field(a, b);
    std::vector<Rat> c(a.coords().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords()[i] + b.coords()[i];
    return AlgebraicNumber(a.field(), std::move(c));
}

inline AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    detail::check_same_field(a, b);
    std::vector<Rat> c(a.coords().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords()[i] - b.coords()[i];
    return AlgebraicNumber(a.field(), std::move(c));
}

inline AlgebraicNumber operator-(const AlgebraicNumber& a) {
    std::vector<Rat> c(a.coords().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -a.coords()[i];
    return AlgebraicNumber(a.field(), std::move(c));
}

inline AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    detail::check_same_field(a, b);
    return detail::from_poly(a.field(), qp_mul(detail::to_poly(a), detail::to_poly(b)));
}

inline AlgebraicNumber inverse(const AlgebraicNumber& a) {
    if (a.is_zero()) throw division_by_zero("inverse of zero field element");
    // u*A + v*m = 1  =>  u = A^-1 mod m
    QPoly u, v;
    QPoly g = qp_xgcd(detail::to_poly(a), a.field()->min_poly_q(), u, v);
    if (g.deg() != 0) throw division_by_zero("element not invertible (reducible modulus?)");
    return detail::from_poly(a.field(), qp_scale(u, Rat::inv(g.c[0])));
}

inline AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a * inverse(b);
}

inline AlgebraicNumber operator*(const AlgebraicNumber& a, const Rat& k) {
    std::vector<Rat> c(a.coords().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords()[i] * k;
    return AlgebraicNumber(a.field(), std::move(c));
}

// Matrix of multiplication by a on the power basis (column j = a * t^j).
inline std::vector<std::vector<Rat>> multiplication_matrix(const AlgebraicNumber& a) {
    const int d = a.field()->degree();
    std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d, Rat(0)));
    QPoly cur = detail::to_poly(a);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i <= cur.deg(); ++i) M[i][j] = cur.c[i];
        if (j + 1 < d) cur = qp_mod(qp_mul(cur, QPoly(std::vector<Rat>{Rat(0), Rat(1)})),
                                    a.field()->min_poly_q());
    }
    return M;
}

namespace detail {

inline Rat det_rational(std::vector<std::vector<Rat>> M) {
    const size_t n = M.size();
    Rat det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && M[piv][k].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(M[piv], M[k]);
            det = -det;
        }
        det *= M[k][k];
        Rat inv = Rat::inv(M[k][k]);
        for (size_t i = k + 1; i < n; ++i) {
            if (M[i][k].is_zero()) continue;
            Rat f = M[i][k] * inv;
            for (size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
        }
    }
    return det;
}

} // namespace detail

// N_{K/Q}(a) = det of multiplication by a.
inline Rat field_norm(const AlgebraicNumber& a) {
    if (a.is_rational()) return Rat::pow(a.rational_value(), a.field()->degree());
    return detail::det_rational(multiplication_matrix(a));
}

// Minimal polynomial over Q (monic), by the first linear dependency among
// 1, a, a^2, ...; no factorization involved.
inline QPoly minimal_polynomial(const AlgebraicNumber& a) {
    const int d = a.field()->degree();
    // powers[k] = coords of a^k
    std::vector<std::vector<Rat>> powers;
    AlgebraicNumber one(a.field(), Rat(1));
    AlgebraicNumber cur = one;
    for (int k = 0; k <= d; ++k) {
        powers.push_back(cur.coords());
        if (k < d) cur = cur * a;
        // solve for monic dependency of length k+1: a^k = sum_{i<k} x_i a^i
        if (k >= 1) {
            // Gaussian solve of the d x k system [powers_0 ... powers_{k-1}] x = powers_k
            std::vector<std::vector<Rat>> A(d, std::vector<Rat>(k + 1, Rat(0)));
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < k; ++j) A[i][j] = powers[j][i];
                A[i][k] = powers[k][i];
            }
            // row reduce
            int row = 0;
            std::vector<int> pivot_col(k, -1);
            for (int col = 0; col < k && row < d; ++col) {
                int piv = -1;
                for (int i = row; i < d; ++i)
                    if (!A[i][col].is_zero()) {
                        piv = i;
                        break;
                    }
                if (piv < 0) continue;
                std::swap(A[piv], A[row]);
                Rat inv = Rat::inv(A[row][col]);
                for (int j = col; j <= k; ++j) A[row][j] *= inv;
                for (int i = 0; i < d; ++i) {
                    if (i == row || A[i][col].is_zero()) continue;
                    Rat f = A[i][col];
                    for (int j = col; j <= k; ++j) A[i][j] -= f * A[row][j];
                }
                pivot_col[col] = row;
                ++row;
            }
            bool consistent = true;
            for (int i = row; i < d; ++i)
                if (!A[i][k].is_zero()) consistent = false;
            bool full = true;
            for (int col = 0; col < k; ++col)
                if (pivot_col[col] < 0) full = false;
            if (consistent && full) {
                std::vector<Rat> mp(k + 1, Rat(0));
                mp[k] = Rat(1);
                for (int col = 0; col < k; ++col) mp[col] = -A[pivot_col[col]][k];
                return QPoly(std::move(mp));
            }
        }
    }
    throw bad_input("minimal polynomial search failed (corrupt element?)");
}

// (norm, minpoly) pair; minpoly returned monic over Q.
inline std::pair<Rat, QPoly> norm_and_minpoly(const AlgebraicNumber& a) {
    return {field_norm(a), minimal_polynomial(a)};
}

} // namespace ellbound

#endif
