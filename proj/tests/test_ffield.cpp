#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordcert/ffield.hpp"

using namespace ordcert;

TEST_CASE("primality and factorization") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK(is_prime(1093));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));

    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(f[1] == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(f[2] == std::pair<std::uint64_t, unsigned>{5, 1});
}

TEST_CASE("prime field arithmetic") {
    FieldPtr F = prime_field(7);
    CHECK(F->order() == 7);
    FieldElement a = F->from_int(3), b = F->from_int(5);
    CHECK(a + b == F->from_int(1));
    CHECK(a * b == F->from_int(1));
    CHECK(-a == F->from_int(4));
    CHECK(a.inverse() == b);
    CHECK(F->from_int(-2) == F->from_int(5));
}

TEST_CASE("extension field construction is deterministic and irreducible") {
    FieldPtr F9 = ExtensionField::create(3, 2);
    CHECK(F9->order_u64() == 9);
    // lexicographically least monic irreducible of degree 2 over F_3 is X^2+1
    CHECK(F9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    FieldPtr F8 = ExtensionField::create(2, 3);
    // X^3+X^2+1 = (1,0,1) beats X^3+X+1 = (1,1,0) in the (c0, c1, c2) order
    CHECK(F8->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});

    CHECK_THROWS_AS(ExtensionField::with_modulus(3, {2, 0, 1}), std::invalid_argument);  // X^2+2=(X+1)(X+2)
    FieldPtr G = ExtensionField::with_modulus(3, {1, 0, 1});
    CHECK(ExtensionField::same_field(*F9, *G));
}

TEST_CASE("field axioms on every element of small fields") {
    for (auto [p, f] : {std::pair<std::uint32_t, std::uint32_t>{2, 4},
                        {3, 3},
                        {5, 2},
                        {7, 1}}) {
        FieldPtr F = ExtensionField::create(p, f);
        std::uint64_t q = F->order_u64();
        for (std::uint64_t i = 0; i < q; ++i) {
            FieldElement x = F->element_at(i);
            CHECK(x.index() == i);
            CHECK(x.pow(q) == x);  // Frobenius fixed-point identity x^q = x
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == F->one());
                mpz_class n = element_order(x);
                CHECK(mpz_class(q - 1) % n == 0);
                CHECK(x.pow(n).is_one());
            }
        }
    }
}

TEST_CASE("element_of_order produces the requested order") {
    FieldPtr F27 = ExtensionField::create(3, 3);
    FieldElement z = element_of_order(F27, 13);  // 13 | 26
    CHECK(element_order(z) == 13);
    FieldElement w = element_of_order(prime_field(11), 5);
    CHECK(element_order(w) == 5);
    CHECK_THROWS(element_of_order(F27, 7));  // 7 does not divide 26
}

TEST_CASE("multiplicative order mod r") {
    CHECK(multiplicative_order_mod(3, 7) == 6);
    CHECK(multiplicative_order_mod(3, 11) == 5);
    CHECK(multiplicative_order_mod(3, 13) == 3);
    CHECK(multiplicative_order_mod(2, 7) == 3);
}

TEST_CASE("large field order does not fit in 64 bits") {
    FieldPtr F = ExtensionField::create(3, 42);
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), 3, 42);
    CHECK(F->order() == q);
    CHECK_THROWS_AS(F->order_u64(), CapExceededError);
}
