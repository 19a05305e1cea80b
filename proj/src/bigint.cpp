#include "ecdlp/bigint.hpp"

#include <cctype>

namespace ecdlp {

std::string to_hex(const Int& v)
{
    if (v < 0)
        throw std::invalid_argument("to_hex: negative value");
    if (v == 0)
        return "0";
    static const char* digits = "0123456789ABCDEF";
    std::string out;
    Int t = v;
    while (t != 0) {
        out.push_back(digits[static_cast<unsigned>(t & 0xF)]);
        t >>= 4;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Int from_hex(std::string_view s)
{
    if (s.empty())
        throw std::invalid_argument("from_hex: empty string");
    Int v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else
            throw std::invalid_argument("from_hex: invalid digit");
        v = (v << 4) | d;
    }
    return v;
}

Int mod_inverse(const Int& a, const Int& m)
{
    // Extended Euclid on (a mod m, m).
    Int r0 = m, r1 = mod_reduce(a, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: element not invertible");
    return mod_reduce(t0, m);
}

}  // namespace ecdlp
