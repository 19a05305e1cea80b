#pragma once

#include "ecdlp/field.hpp"

#include <optional>
#include <vector>

namespace ecdlp {

// All curves in this project are y^2 = x^3 + 7 over F_p.
inline constexpr int kCurveB = 7;

// Affine point or the point at infinity. The modulus is carried so that the
// identity can participate in arithmetic.
class CurvePoint {
public:
    static CurvePoint infinity(Int p) { return CurvePoint(std::move(p)); }

    CurvePoint(FieldElement x, FieldElement y)
        : p_(x.modulus()), x_(std::move(x)), y_(std::move(y))
    {
        if (x_->modulus() != y_->modulus())
            throw ModulusMismatch();
    }

    CurvePoint(const Int& x, const Int& y, const Int& p)
        : CurvePoint(FieldElement(x, p), FieldElement(y, p))
    {
    }

    bool is_infinity() const { return !x_.has_value(); }
    const Int& modulus() const { return p_; }

    const FieldElement& x() const { return coord(x_); }
    const FieldElement& y() const { return coord(y_); }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b)
    {
        if (a.p_ != b.p_)
            return false;
        if (a.is_infinity() || b.is_infinity())
            return a.is_infinity() && b.is_infinity();
        return *a.x_ == *b.x_ && *a.y_ == *b.y_;
    }

private:
    explicit CurvePoint(Int p) : p_(std::move(p)) {}

    static const FieldElement& coord(const std::optional<FieldElement>& c)
    {
        if (!c)
            throw std::domain_error("coordinate of the point at infinity");
        return *c;
    }

    Int p_;
    std::optional<FieldElement> x_;
    std::optional<FieldElement> y_;
};

// Prime modulus, group order, and the order's bit length.
struct GroupContext {
    Int p;
    Int n;
    std::size_t bits;

    GroupContext(Int p_, Int n_) : p(std::move(p_)), n(std::move(n_)), bits(ceil_log2(n)) {}

    bool order_in_hasse_interval() const
    {
        Int w = 2 * isqrt_ceil(p);
        return n >= p + 1 - w && n <= p + 1 + w;
    }
};

bool is_on_curve(const CurvePoint& P);

CurvePoint negate(const CurvePoint& P);

// Chord-and-tangent group law in affine coordinates; the semantic ground
// truth for all point arithmetic.
CurvePoint point_add(const CurvePoint& P, const CurvePoint& Q);

// Double-and-add in affine coordinates.
CurvePoint scalar_mul_affine(const Int& k, const CurvePoint& P);

// Jacobian-coordinate fast path; bit-equivalent to scalar_mul_affine.
CurvePoint scalar_mul(const Int& k, const CurvePoint& P);

// Jacobian points for inversion-free bulk work (point counting). Z = 0
// encodes the identity.
struct JacobianPoint {
    Int X, Y, Z;

    static JacobianPoint identity() { return {1, 1, 0}; }
    bool is_identity() const { return Z == 0; }
};

JacobianPoint to_jacobian(const CurvePoint& P);
JacobianPoint jac_add(const JacobianPoint& P, const JacobianPoint& Q, const Int& p);
JacobianPoint jac_double(const JacobianPoint& P, const Int& p);
CurvePoint jac_to_affine(const JacobianPoint& P, const Int& p);

// Converts many Jacobian points with a single field inversion.
std::vector<CurvePoint> batch_to_affine(const std::vector<JacobianPoint>& pts, const Int& p);

}  // namespace ecdlp
