#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecdlp {

using Int = boost::multiprecision::cpp_int;

// Uppercase hex without prefix, the notation used by the challenge cards.
std::string to_hex(const Int& v);
Int from_hex(std::string_view s);

// Number of bits in the binary representation; 0 for zero.
inline std::size_t bit_length(const Int& v)
{
    if (v == 0)
        return 0;
    return boost::multiprecision::msb(v) + 1;
}

// ceil(log2 n) for n >= 1.
inline std::size_t ceil_log2(const Int& n)
{
    if (n <= 0)
        throw std::invalid_argument("ceil_log2: positive argument required");
    std::size_t b = bit_length(n);
    Int pow2 = Int(1) << (b - 1);
    return (n == pow2) ? b - 1 : b;
}

// Floor square root.
inline Int isqrt(const Int& v)
{
    if (v < 0)
        throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(v);
}

// Smallest s with s*s >= v.
inline Int isqrt_ceil(const Int& v)
{
    Int s = isqrt(v);
    return (s * s == v) ? s : s + 1;
}

inline Int mod_pow(const Int& base, const Int& exp, const Int& m)
{
    return boost::multiprecision::powm(base % m, exp, m);
}

// Canonical residue in [0, m).
inline Int mod_reduce(const Int& v, const Int& m)
{
    Int r = v % m;
    if (r < 0)
        r += m;
    return r;
}

// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

}  // namespace ecdlp
