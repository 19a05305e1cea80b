#include "ecdlp/field.hpp"

namespace ecdlp {

int legendre(const Int& a, const Int& p)
{
    Int r = mod_reduce(a, p);
    if (r == 0)
        return 0;
    Int e = mod_pow(r, (p - 1) / 2, p);
    if (e == 1)
        return 1;
    if (e == p - 1)
        return -1;
    // Only possible when p is not prime.
    throw std::domain_error("legendre: modulus is not prime");
}

int legendre(const FieldElement& a)
{
    return legendre(a.value(), a.modulus());
}

FieldElement sqrt_mod(const FieldElement& a)
{
    const Int& p = a.modulus();
    if (a.is_zero())
        return a;
    if (legendre(a) != 1)
        throw NonResidue();

    if (p % 4 == 3)
        return a.pow((p + 1) / 4);

    // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
    Int q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1)
        ++z;

    Int m = s;
    Int c = mod_pow(z, q, p);
    Int t = mod_pow(a.value(), q, p);
    Int r = mod_pow(a.value(), (q + 1) / 2, p);
    while (t != 1) {
        Int i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = (tt * tt) % p;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j)
            b = (b * b) % p;
        m = i;
        c = (b * b) % p;
        t = (t * c) % p;
        r = (r * b) % p;
    }
    return FieldElement(r, p);
}

}  // namespace ecdlp
