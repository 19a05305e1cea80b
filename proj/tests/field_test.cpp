#include "ecdlp/field.hpp"
#include "ecdlp/rng.hpp"

#include <doctest.h>

#include <vector>

using namespace ecdlp;

TEST_CASE("field arithmetic basics mod 31")
{
    FieldElement a(20, 31), b(25, 31);
    CHECK((a + b).value() == 14);
    CHECK((a - b).value() == 26);
    CHECK((a * b).value() == 500 % 31);
    CHECK((-a).value() == 11);
    CHECK(FieldElement(2, 31).inverse().value() == 16);
    CHECK(a.pow(30).value() == 1);  // Fermat
    CHECK_THROWS_AS(FieldElement(0, 31).inverse(), std::domain_error);
    CHECK_THROWS_AS(a + FieldElement(1, 43), ModulusMismatch);
}

TEST_CASE("legendre symbol matches the exhaustive square table")
{
    for (Int p : {Int(31), Int(43), Int(1009), Int(65521)}) {
        std::size_t pp = p.convert_to<std::size_t>();
        std::vector<char> sq(pp, 0);
        for (std::size_t y = 0; y < pp; ++y)
            sq[y * y % pp] = 1;
        for (std::size_t a = 0; a < pp; ++a) {
            int want = a == 0 ? 0 : (sq[a] ? 1 : -1);
            CHECK(legendre(Int(a), p) == want);
        }
    }
}

TEST_CASE("square roots on both residue classes of p mod 4")
{
    // 43 = 3 mod 4: frozen branch value.
    CHECK(sqrt_mod(FieldElement(23, 43)).value() == 25);
    CHECK(sqrt_mod(FieldElement(0, 43)).value() == 0);
    CHECK_THROWS_AS(sqrt_mod(FieldElement(2, 43)), NonResidue);  // legendre(2,43) = -1

    // 1009 = 1 mod 4 exercises Tonelli-Shanks.
    Rng rng(99);
    for (Int p : {Int(43), Int(1009), Int(65521), (Int(1) << 61) - 1}) {
        for (int i = 0; i < 50; ++i) {
            Int r = rng.below(p);
            FieldElement a(r * r, p);
            FieldElement y = sqrt_mod(a);
            CHECK((y * y) == a);
        }
    }
}

TEST_CASE("sqrt branch is deterministic")
{
    FieldElement a(23, 1009);
    FieldElement s = sqrt_mod(a * a);
    CHECK(sqrt_mod(a * a) == s);
}
