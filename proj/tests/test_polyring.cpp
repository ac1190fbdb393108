#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordcert/polyring.hpp"

using namespace ordcert;

TEST_CASE("integer polynomial arithmetic") {
    IntPolynomial f{1, 2, 1};  // (X+1)^2
    IntPolynomial g{-1, 1};    // X-1
    CHECK(f.degree() == 2);
    CHECK((f * g).coeffs() == std::vector<mpz_class>{-1, -1, 1, 1});
    CHECK((f - f).is_zero());
    CHECK((IntPolynomial::x().pow(3) + IntPolynomial::constant(5)).evaluate(2) == 13);
    CHECK((-g).coeffs() == std::vector<mpz_class>{1, -1});
    IntPolynomial half({1, 1}, 2);  // (X+1)/2
    CHECK((half * mpz_class(2)) == IntPolynomial{1, 1});
}

TEST_CASE("reduction mod p handles denominators") {
    IntPolynomial half({1, 0, 1}, 2);  // (X^2+1)/2
    FieldPolynomial r = reduce_mod_p(half, 3);
    // 1/2 = 2 mod 3
    CHECK(r == FieldPolynomial::from_ints(prime_field(3), {2, 0, 2}));
    IntPolynomial bad({1}, 3);
    CHECK_THROWS(reduce_mod_p(bad, 3));
}

TEST_CASE("field polynomial division and gcd") {
    FieldPtr F = prime_field(5);
    FieldPolynomial a = FieldPolynomial::from_ints(F, {-1, 0, 0, 1});  // X^3-1
    FieldPolynomial b = FieldPolynomial::from_ints(F, {-1, 0, 1});     // X^2-1
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    FieldPolynomial g = gcd(a, b);
    CHECK(g.monic() == FieldPolynomial::from_ints(F, {-1, 1}));  // X-1
}

TEST_CASE("known factorizations") {
    // X^4+1 over F_2 = (X+1)^4
    auto f2 = factor(FieldPolynomial::from_ints(prime_field(2), {1, 0, 0, 0, 1}));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == FieldPolynomial::from_ints(prime_field(2), {1, 1}));
    CHECK(f2[0].second == 4);

    // X^4+1 over F_3 = (X^2+X+2)(X^2+2X+2)
    auto f3 = factor(FieldPolynomial::from_ints(prime_field(3), {1, 0, 0, 0, 1}));
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].first == FieldPolynomial::from_ints(prime_field(3), {2, 1, 1}));
    CHECK(f3[1].first == FieldPolynomial::from_ints(prime_field(3), {2, 2, 1}));
    CHECK(max_irreducible_degree(FieldPolynomial::from_ints(prime_field(3), {1, 0, 0, 0, 1})) == 2);

    // X^2+X+1 splits over F_4 into two linear factors
    FieldPtr F4 = ExtensionField::create(2, 2);
    auto f4 = factor(FieldPolynomial::from_ints(F4, {1, 1, 1}));
    REQUIRE(f4.size() == 2);
    CHECK(f4[0].first.degree() == 1);
    CHECK(f4[1].first.degree() == 1);

    CHECK(is_irreducible(FieldPolynomial::from_ints(prime_field(3), {1, 2, 0, 1})));
    CHECK_FALSE(is_irreducible(FieldPolynomial::from_ints(prime_field(3), {2, 0, 1})));
}

TEST_CASE("factorization round-trips on random polynomials") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
        FieldPtr F = trial % 6 < 3 ? prime_field(p) : ExtensionField::create(p, 2);
        int deg = 1 + int(rng() % 12);
        std::vector<FieldElement> cs;
        for (int i = 0; i < deg; ++i) cs.push_back(F->element_at(rng() % F->order_u64()));
        cs.push_back(F->element_at(1 + rng() % (F->order_u64() - 1)));  // nonzero leading
        FieldPolynomial f(F, cs);
        auto fac = factor(f);
        FieldPolynomial prod = FieldPolynomial::one(F) * f.leading();
        for (const auto& [g, mult] : fac) {
            CHECK(g.is_monic());
            CHECK(is_irreducible(g));
            for (unsigned m = 0; m < mult; ++m) prod = prod * g;
        }
        CHECK(prod == f);
    }
}

TEST_CASE("resultants: fixed values and root-product oracle") {
    CHECK(resultant(IntPolynomial{-1, 0, 1}, IntPolynomial{-4, 0, 1}) == 9);
    CHECK(resultant(IntPolynomial{-1, 0, 0, 1}, IntPolynomial{-1, 0, 1}) == 0);  // share X=1
    // Res(f, g) = lc(g)^deg f * prod over roots b of g of f(b) -- swap-symmetric
    // up to (-1)^(deg f * deg g); check against integer-rooted products.
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int df = 1 + int(rng() % 4), dg = 1 + int(rng() % 4);
        std::vector<long> fr, gr;
        IntPolynomial f{1}, g{1};
        for (int i = 0; i < df; ++i) {
            long a = long(rng() % 11) - 5;
            fr.push_back(a);
            f = f * IntPolynomial{-a, 1};
        }
        for (int i = 0; i < dg; ++i) {
            long b = long(rng() % 11) - 5;
            gr.push_back(b);
            g = g * IntPolynomial{-b, 1};
        }
        mpz_class expected = 1;
        for (long a : fr)
            for (long b : gr) expected *= mpz_class(a - b);
        CHECK(resultant(f, g) == expected);
    }
}

TEST_CASE("rational gcd of integer polynomials") {
    IntPolynomial a{-1, 0, 1};     // X^2-1
    IntPolynomial b{-1, 0, 0, 1};  // X^3-1
    IntPolynomial g = int_gcd(a, b);
    CHECK(g == IntPolynomial{-1, 1});
    CHECK(int_gcd(IntPolynomial{2}, IntPolynomial{0, 4}) == IntPolynomial{1});
}

TEST_CASE("polynomial evaluation embeds prime-field constants into extensions") {
    FieldPtr F27 = ExtensionField::create(3, 3);
    FieldPolynomial f = FieldPolynomial::from_ints(prime_field(3), {1, 2, 1});  // (X+1)^2
    FieldElement x = F27->generator_x();
    FieldElement ex = f.evaluate(x);
    CHECK(ex == (x + F27->one()) * (x + F27->one()));
}
