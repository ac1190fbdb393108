#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordcert/freyfamily.hpp"

using namespace ordcert;

namespace {

const Signature kSig123{1, 2, 3};
const Signature kSig124{1, 2, 4};

bool divisible_by_3(const IntPolynomial& f) {
    if (f.denominator() != 1) return false;
    for (const auto& c : f.coeffs())
        if (c % 3 != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("signature parsing and validation") {
    CHECK(Signature::parse("1,2,3").label() == "1,2,3");
    CHECK_THROWS(Signature::parse("1,2"));
    CHECK_THROWS(Signature::parse("1,2,x"));
    CHECK_THROWS_AS(Signature(1, 1, 2), std::invalid_argument);  // repeated exponent
    CHECK_THROWS_AS(Signature(0, 1, 2), std::invalid_argument);
}

TEST_CASE("canonical parameter classes cover all nonzero residue pairs") {
    CHECK(ParameterClass::canonical(1, 0) == ParameterClass{1, 0});
    CHECK(ParameterClass::canonical(0, 1) == ParameterClass{1, 0});
    CHECK(ParameterClass::canonical(4, 4) == ParameterClass{1, 1});
    CHECK(ParameterClass::canonical(2, 2) == ParameterClass{1, 1});
    CHECK(ParameterClass::canonical(2, 1) == ParameterClass{1, 2});
    CHECK(ParameterClass::canonical(-1, 1) == ParameterClass{1, 2});
    CHECK(ParameterClass::canonical(0, 2) == ParameterClass{1, 0});
    CHECK_THROWS(ParameterClass::canonical(3, 6));
}

TEST_CASE("A + B + C = 0 and the u,v,w decomposition, all classes, both signatures") {
    for (const Signature& k : {kSig123, kSig124}) {
        for (const ParameterClass& cls : canonical_classes()) {
            auto [A, B, C] = abc_polynomials(k, cls);
            CHECK((A + B + C).is_zero());
            auto [u, v, w] = uvw_decomposition(k, cls);
            CHECK(A == v - w);
            CHECK(B == w - u);
            CHECK(C == u - v);
        }
    }
}

TEST_CASE("cubic identity and the characteristic-3 collapse") {
    for (const Signature& k : {kSig123, kSig124}) {
        for (const ParameterClass& cls : canonical_classes()) {
            auto [u, v, w] = uvw_decomposition(k, cls);
            IntPolynomial s = u + v + w;
            IntPolynomial cubes = u.pow(3) + v.pow(3) + w.pow(3);
            // 2(u^3+v^3+w^3) = (u+v+w)[(w-v)^2+(u-w)^2+(v-u)^2] + 6uvw
            IntPolynomial rhs =
                s * ((w - v).pow(2) + (u - w).pow(2) + (v - u).pow(2)) + u * v * w * mpz_class(6);
            CHECK(cubes * mpz_class(2) == rhs);
            // (u+v+w)^3 = u^3+v^3+w^3 coefficientwise mod 3
            CHECK(divisible_by_3(s.pow(3) - cubes));
        }
    }
}

TEST_CASE("h for exponents (1,2,3), class (1,1): degree and factorization mod 3") {
    IntPolynomial h = h_polynomial(kSig123, ParameterClass{1, 1});
    CHECK(h.degree() == 5);
    CHECK(h == IntPolynomial{4, 8, -5, -6, 1, 1});

    FieldPtr F3 = prime_field(3);
    auto factors = factor(reduce_mod_p(h, 3));
    REQUIRE(factors.size() == 3);
    // (1+X)(2+X)(2+X+X^2+X^3), each with multiplicity 1
    CHECK(factors[0].first == FieldPolynomial::from_ints(F3, {1, 1}));
    CHECK(factors[1].first == FieldPolynomial::from_ints(F3, {2, 1}));
    CHECK(factors[2].first == FieldPolynomial::from_ints(F3, {2, 1, 1, 1}));
    for (const auto& [fac, mult] : factors) CHECK(mult == 1);
}

TEST_CASE("c4 and Delta mod 3 depend only on the residue class of (a, b)") {
    for (const Signature& k : {kSig123, kSig124}) {
        for (auto [raw, canon] : std::vector<std::pair<ParameterClass, ParameterClass>>{
                 {{4, 4}, {1, 1}},
                 {{4, 3}, {1, 0}},
                 {{-2, 5}, {1, 2}},
                 {{7, 0}, {1, 0}}}) {
            auto [c4_raw, d_raw] = c4_delta_polynomials(k, raw);
            auto [c4_can, d_can] = c4_delta_polynomials(k, canon);
            CHECK(reduce_mod_p(c4_raw, 3) == reduce_mod_p(c4_can, 3));
            CHECK(reduce_mod_p(d_raw, 3) == reduce_mod_p(d_can, 3));
        }
    }
}

TEST_CASE("every nonzero residue pair reduces to a representative with the same c4, Delta") {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == 0 && b == 0) continue;
            ParameterClass raw{a, b}, canon = ParameterClass::canonical(a, b);
            auto [c4_raw, d_raw] = c4_delta_polynomials(kSig123, raw);
            auto [c4_can, d_can] = c4_delta_polynomials(kSig123, canon);
            CHECK(reduce_mod_p(c4_raw, 3) == reduce_mod_p(c4_can, 3));
            CHECK(reduce_mod_p(d_raw, 3) == reduce_mod_p(d_can, 3));
        }
}

TEST_CASE("reduced curve invariants match evaluating the c4 and Delta polynomials") {
    for (const Signature& k : {kSig123, kSig124}) {
        for (std::uint64_t r : {7ull, 11ull, 13ull}) {
            for (const ResiduePlace& place : residue_places(r, 3)) {
                for (const ParameterClass& cls : canonical_classes()) {
                    WeierstrassCurve curve = frey_curve_at_place(k, cls, place);
                    auto inv = invariants(curve);
                    auto [c4p, dp] = c4_delta_polynomials(k, cls);
                    CHECK(inv.c4 == reduce_mod_p(c4p, 3).evaluate(place.xi_image));
                    CHECK(inv.delta == reduce_mod_p(dp, 3).evaluate(place.xi_image));
                }
            }
        }
    }
}

TEST_CASE("curves require characteristic 3") {
    auto places5 = residue_places(11, 5);
    CHECK_THROWS_AS(frey_curve_at_place(kSig123, ParameterClass{1, 1}, places5[0]),
                    std::invalid_argument);
}

TEST_CASE("JSON dump carries all polynomial data") {
    FreyData d = frey_data(kSig123, ParameterClass{1, 1});
    auto j = to_json(d);
    CHECK(j["k"] == "1,2,3");
    CHECK(j["class"] == "1,1");
    CHECK(j["h"].size() == 6);
    CHECK(j["h"][0] == "4");
    CHECK(j["h"][5] == "1");
    for (const char* key : {"A", "B", "C", "u", "v", "w", "c4", "delta"})
        CHECK(j.contains(key));
}
