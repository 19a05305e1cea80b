#include "ecdlp/curve.hpp"

namespace ecdlp {

namespace {

Int addm(const Int& a, const Int& b, const Int& p)
{
    Int r = a + b;
    if (r >= p)
        r -= p;
    return r;
}

Int subm(const Int& a, const Int& b, const Int& p)
{
    Int r = a - b;
    if (r < 0)
        r += p;
    return r;
}

Int mulm(const Int& a, const Int& b, const Int& p)
{
    return (a * b) % p;
}

}  // namespace

bool is_on_curve(const CurvePoint& P)
{
    if (P.is_infinity())
        return true;
    const Int& p = P.modulus();
    const Int& x = P.x().value();
    const Int& y = P.y().value();
    return mod_reduce(y * y - (x * x * x + kCurveB), p) == 0;
}

CurvePoint negate(const CurvePoint& P)
{
    if (P.is_infinity())
        return P;
    return CurvePoint(P.x(), -P.y());
}

CurvePoint point_add(const CurvePoint& P, const CurvePoint& Q)
{
    if (P.modulus() != Q.modulus())
        throw ModulusMismatch();
    if (P.is_infinity())
        return Q;
    if (Q.is_infinity())
        return P;

    const FieldElement& x1 = P.x();
    const FieldElement& y1 = P.y();
    const FieldElement& x2 = Q.x();
    const FieldElement& y2 = Q.y();

    FieldElement lambda = x1;  // placeholder, overwritten below
    if (x1 == x2) {
        if (!(y1 == y2) || y1.is_zero())
            return CurvePoint::infinity(P.modulus());
        // Tangent slope 3x^2 / 2y (the curve family has no linear term).
        FieldElement three_x2 = x1 * x1;
        three_x2 = three_x2 + three_x2 + x1 * x1;
        FieldElement two_y = y1 + y1;
        lambda = three_x2 * two_y.inverse();
    } else {
        lambda = (y2 - y1) * (x2 - x1).inverse();
    }

    FieldElement x3 = lambda * lambda - x1 - x2;
    FieldElement y3 = lambda * (x1 - x3) - y1;
    return CurvePoint(x3, y3);
}

CurvePoint scalar_mul_affine(const Int& k, const CurvePoint& P)
{
    if (k < 0)
        throw std::invalid_argument("scalar_mul: negative scalar");
    CurvePoint acc = CurvePoint::infinity(P.modulus());
    if (k == 0 || P.is_infinity())
        return acc;
    CurvePoint base = P;
    Int e = k;
    while (e != 0) {
        if ((e & 1) != 0)
            acc = point_add(acc, base);
        e >>= 1;
        if (e != 0)
            base = point_add(base, base);
    }
    return acc;
}

JacobianPoint to_jacobian(const CurvePoint& P)
{
    if (P.is_infinity())
        return JacobianPoint::identity();
    return {P.x().value(), P.y().value(), 1};
}

JacobianPoint jac_double(const JacobianPoint& P, const Int& p)
{
    if (P.is_identity() || P.Y == 0)
        return JacobianPoint::identity();
    // dbl-2009-l specialized to a = 0.
    Int A = mulm(P.X, P.X, p);
    Int B = mulm(P.Y, P.Y, p);
    Int C = mulm(B, B, p);
    Int xb = addm(P.X, B, p);
    Int D = subm(subm(mulm(xb, xb, p), A, p), C, p);
    D = addm(D, D, p);
    Int E = addm(addm(A, A, p), A, p);
    Int F = mulm(E, E, p);
    Int X3 = subm(F, addm(D, D, p), p);
    Int C8 = addm(C, C, p);
    C8 = addm(C8, C8, p);
    C8 = addm(C8, C8, p);
    Int Y3 = subm(mulm(E, subm(D, X3, p), p), C8, p);
    Int Z3 = mulm(addm(P.Y, P.Y, p), P.Z, p);
    return {X3, Y3, Z3};
}

JacobianPoint jac_add(const JacobianPoint& P, const JacobianPoint& Q, const Int& p)
{
    if (P.is_identity())
        return Q;
    if (Q.is_identity())
        return P;
    Int Z1Z1 = mulm(P.Z, P.Z, p);
    Int Z2Z2 = mulm(Q.Z, Q.Z, p);
    Int U1 = mulm(P.X, Z2Z2, p);
    Int U2 = mulm(Q.X, Z1Z1, p);
    Int S1 = mulm(mulm(P.Y, Q.Z, p), Z2Z2, p);
    Int S2 = mulm(mulm(Q.Y, P.Z, p), Z1Z1, p);
    if (U1 == U2) {
        if (S1 != S2)
            return JacobianPoint::identity();
        return jac_double(P, p);
    }
    Int H = subm(U2, U1, p);
    Int I = addm(H, H, p);
    I = mulm(I, I, p);
    Int J = mulm(H, I, p);
    Int r = subm(S2, S1, p);
    r = addm(r, r, p);
    Int V = mulm(U1, I, p);
    Int X3 = subm(subm(mulm(r, r, p), J, p), addm(V, V, p), p);
    Int S1J = mulm(S1, J, p);
    Int Y3 = subm(mulm(r, subm(V, X3, p), p), addm(S1J, S1J, p), p);
    Int ZZ = addm(P.Z, Q.Z, p);
    ZZ = subm(subm(mulm(ZZ, ZZ, p), Z1Z1, p), Z2Z2, p);
    Int Z3 = mulm(ZZ, H, p);
    return {X3, Y3, Z3};
}

CurvePoint jac_to_affine(const JacobianPoint& P, const Int& p)
{
    if (P.is_identity())
        return CurvePoint::infinity(p);
    Int zi = mod_inverse(P.Z, p);
    Int zi2 = mulm(zi, zi, p);
    Int x = mulm(P.X, zi2, p);
    Int y = mulm(P.Y, mulm(zi2, zi, p), p);
    return CurvePoint(x, y, p);
}

std::vector<CurvePoint> batch_to_affine(const std::vector<JacobianPoint>& pts, const Int& p)
{
    // Montgomery batch inversion over the nonzero Z's.
    std::vector<Int> prefix;
    prefix.reserve(pts.size());
    Int acc = 1;
    for (const auto& pt : pts) {
        prefix.push_back(acc);
        if (!pt.is_identity())
            acc = mulm(acc, pt.Z, p);
    }
    Int inv = mod_inverse(acc, p);
    std::vector<CurvePoint> out(pts.size(), CurvePoint::infinity(p));
    for (std::size_t i = pts.size(); i-- > 0;) {
        const auto& pt = pts[i];
        if (pt.is_identity())
            continue;
        Int zi = mulm(inv, prefix[i], p);
        inv = mulm(inv, pt.Z, p);
        Int zi2 = mulm(zi, zi, p);
        out[i] = CurvePoint(mulm(pt.X, zi2, p), mulm(pt.Y, mulm(zi2, zi, p), p), p);
    }
    return out;
}

CurvePoint scalar_mul(const Int& k, const CurvePoint& P)
{
    if (k < 0)
        throw std::invalid_argument("scalar_mul: negative scalar");
    if (k == 0 || P.is_infinity())
        return CurvePoint::infinity(P.modulus());
    const Int& p = P.modulus();
    JacobianPoint base = to_jacobian(P);
    JacobianPoint acc = JacobianPoint::identity();
    for (std::size_t i = bit_length(k); i-- > 0;) {
        acc = jac_double(acc, p);
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(i)))
            acc = jac_add(acc, base, p);
    }
    return jac_to_affine(acc, p);
}

}  // namespace ecdlp
