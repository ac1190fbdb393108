#pragma once

#include <array>
#include <string>

#include "ordcert/cyclotomic.hpp"
#include "ordcert/supersingular.hpp"

#include <json.hpp>

namespace ordcert {

/// Exponent triple (k1, k2, k3), pairwise distinct and >= 1.
struct Signature {
    unsigned k1, k2, k3;
    Signature(unsigned k1, unsigned k2, unsigned k3);
    std::string label() const;  // "1,2,3"
    static Signature parse(const std::string& s);
};

/// Residue pair (a, b) mod 3, not both zero, with canonical representative in
/// {(1,0), (1,1), (1,2)}.
struct ParameterClass {
    int a, b;
    static ParameterClass canonical(long a, long b);
    std::string label() const;  // "1,0"
    bool operator==(const ParameterClass&) const = default;
};

std::array<ParameterClass, 3> canonical_classes();

/// All polynomial data of one (signature, class) member, in the xi_1 power
/// basis throughout.
struct FreyData {
    Signature k;
    ParameterClass cls;
    IntPolynomial A, B, C;
    IntPolynomial u, v, w, h;
    IntPolynomial c4_poly, delta_poly;
};

/// A = (xi_{k3} - xi_{k2})(a^2 + xi_{k1} ab + b^2), cyclically for B; C = -A-B.
std::tuple<IntPolynomial, IntPolynomial, IntPolynomial> abc_polynomials(const Signature& k,
                                                                        const ParameterClass& cls);

/// The u, v, w with A = v - w, B = w - u, C = u - v for the three canonical
/// classes.
std::tuple<IntPolynomial, IntPolynomial, IntPolynomial> uvw_decomposition(
    const Signature& k, const ParameterClass& cls);

IntPolynomial h_polynomial(const Signature& k, const ParameterClass& cls);

/// c4 and Delta of the model y^2 = x(x-A)(x+B), as polynomials in xi_1:
/// 16(A^2 + AB + B^2) and 16(ABC)^2.
std::pair<IntPolynomial, IntPolynomial> c4_delta_polynomials(const Signature& k,
                                                             const ParameterClass& cls);

FreyData frey_data(const Signature& k, const ParameterClass& cls);

/// The reduced curve y^2 = x(x - A(xi)) (x + B(xi)) over the residue field of
/// the place. Only characteristic 3 carries the good-reduction guarantee; a
/// vanishing discriminant is a hard inconsistency.
WeierstrassCurve frey_curve_at_place(const Signature& k, const ParameterClass& cls,
                                     const ResiduePlace& place);

nlohmann::ordered_json to_json(const FreyData& data);

}  // namespace ordcert
