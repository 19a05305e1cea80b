#pragma once

#include "ecdlp/bigint.hpp"

namespace ecdlp {

struct ModulusMismatch : std::invalid_argument {
    ModulusMismatch() : std::invalid_argument("field operands have different moduli") {}
};

struct NonResidue : std::domain_error {
    NonResidue() : std::domain_error("square root of a quadratic non-residue") {}
};

// Canonical residue modulo an ambient prime p. Immutable value type.
class FieldElement {
public:
    FieldElement(Int value, Int modulus)
        : v_(mod_reduce(value, modulus)), p_(std::move(modulus))
    {
        if (p_ < 2)
            throw std::invalid_argument("FieldElement: modulus must be >= 2");
    }

    const Int& value() const { return v_; }
    const Int& modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b)
    {
        a.check(b);
        Int s = a.v_ + b.v_;
        if (s >= a.p_)
            s -= a.p_;
        return FieldElement(Raw{}, std::move(s), a.p_);
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b)
    {
        a.check(b);
        Int s = a.v_ - b.v_;
        if (s < 0)
            s += a.p_;
        return FieldElement(Raw{}, std::move(s), a.p_);
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b)
    {
        a.check(b);
        return FieldElement(Raw{}, (a.v_ * b.v_) % a.p_, a.p_);
    }

    FieldElement operator-() const
    {
        return FieldElement(Raw{}, v_ == 0 ? Int(0) : Int(p_ - v_), p_);
    }

    FieldElement inverse() const
    {
        if (v_ == 0)
            throw std::domain_error("FieldElement: inversion of zero");
        return FieldElement(Raw{}, mod_inverse(v_, p_), p_);
    }

    FieldElement pow(const Int& e) const
    {
        return FieldElement(Raw{}, mod_pow(v_, e, p_), p_);
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }

private:
    struct Raw {};
    FieldElement(Raw, Int v, Int p) : v_(std::move(v)), p_(std::move(p)) {}

    void check(const FieldElement& o) const
    {
        if (p_ != o.p_)
            throw ModulusMismatch();
    }

    Int v_;
    Int p_;
};

// Euler's criterion: 1 for a nonzero square, -1 for a non-square, 0 for zero.
int legendre(const FieldElement& a);
int legendre(const Int& a, const Int& p);

// A square root of a residue (the branch is fixed: a^((p+1)/4) for
// p = 3 mod 4, Tonelli-Shanks seeded with the smallest non-residue
// otherwise). The other root is p - y. Throws NonResidue.
FieldElement sqrt_mod(const FieldElement& a);

}  // namespace ecdlp
