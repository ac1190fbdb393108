#include "ordcert/freyfamily.hpp"

#include <sstream>

namespace ordcert {

Signature::Signature(unsigned k1_, unsigned k2_, unsigned k3_) : k1(k1_), k2(k2_), k3(k3_) {
    if (k1 < 1 || k2 < 1 || k3 < 1 || k1 == k2 || k1 == k3 || k2 == k3)
        throw std::invalid_argument("signature entries must be distinct and >= 1");
}

std::string Signature::label() const {
    std::ostringstream os;
    os << k1 << "," << k2 << "," << k3;
    return os.str();
}

Signature Signature::parse(const std::string& s) {
    unsigned k1 = 0, k2 = 0, k3 = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> k1 >> c1 >> k2 >> c2 >> k3) || c1 != ',' || c2 != ',' || !is.eof())
        throw std::invalid_argument("signature must be of the form k1,k2,k3");
    return Signature(k1, k2, k3);
}

ParameterClass ParameterClass::canonical(long a, long b) {
    int ra = int(((a % 3) + 3) % 3);
    int rb = int(((b % 3) + 3) % 3);
    if (ra == 0 && rb == 0)
        throw std::invalid_argument("parameter class (0,0) mod 3 is excluded");
    if (ra == 0) std::swap(ra, rb);        // swap a and b: symmetric in the forms
    if (ra == 2) {                         // negate: (a,b) ~ (-a,-b)
        ra = 1;
        rb = (3 - rb) % 3;
    }
    return ParameterClass{ra, rb};
}

std::string ParameterClass::label() const {
    std::ostringstream os;
    os << a << "," << b;
    return os.str();
}

std::array<ParameterClass, 3> canonical_classes() {
    return {ParameterClass{1, 0}, ParameterClass{1, 1}, ParameterClass{1, 2}};
}

std::tuple<IntPolynomial, IntPolynomial, IntPolynomial> abc_polynomials(
    const Signature& k, const ParameterClass& cls) {
    mpz_class a = cls.a, b = cls.b;
    IntPolynomial p1 = xi_in_power_basis(k.k1);
    IntPolynomial p2 = xi_in_power_basis(k.k2);
    IntPolynomial p3 = xi_in_power_basis(k.k3);
    mpz_class sq = a * a + b * b;
    IntPolynomial A = (p3 - p2) * (p1 * (a * b) + IntPolynomial::constant(sq));
    IntPolynomial B = (p1 - p3) * (p2 * (a * b) + IntPolynomial::constant(sq));
    IntPolynomial C = -A - B;
    return {A, B, C};
}

std::tuple<IntPolynomial, IntPolynomial, IntPolynomial> uvw_decomposition(
    const Signature& k, const ParameterClass& cls) {
    IntPolynomial p1 = xi_in_power_basis(k.k1);
    IntPolynomial p2 = xi_in_power_basis(k.k2);
    IntPolynomial p3 = xi_in_power_basis(k.k3);
    // the negations make A = v - w, B = w - u, C = u - v hold literally
    if (cls == ParameterClass{1, 0}) return {-p1, -p2, -p3};
    if (cls == ParameterClass{1, 1})
        return {p2 * p3 - p1 * mpz_class(2), p1 * p3 - p2 * mpz_class(2),
                p1 * p2 - p3 * mpz_class(2)};
    if (cls == ParameterClass{1, 2})
        return {p2 * p3 * mpz_class(2) - p1 * mpz_class(5),
                p1 * p3 * mpz_class(2) - p2 * mpz_class(5),
                p1 * p2 * mpz_class(2) - p3 * mpz_class(5)};
    throw std::invalid_argument("uvw_decomposition: class outside the canonical representatives");
}

IntPolynomial h_polynomial(const Signature& k, const ParameterClass& cls) {
    auto [u, v, w] = uvw_decomposition(k, cls);
    return u + v + w;
}

std::pair<IntPolynomial, IntPolynomial> c4_delta_polynomials(const Signature& k,
                                                             const ParameterClass& cls) {
    auto [A, B, C] = abc_polynomials(k, cls);
    IntPolynomial c4 = (A * A + A * B + B * B) * mpz_class(16);
    IntPolynomial prod = A * B * C;
    IntPolynomial delta = prod * prod * mpz_class(16);
    return {c4, delta};
}

FreyData frey_data(const Signature& k, const ParameterClass& cls) {
    FreyData d{k, cls, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    std::tie(d.A, d.B, d.C) = abc_polynomials(k, cls);
    std::tie(d.u, d.v, d.w) = uvw_decomposition(k, cls);
    d.h = d.u + d.v + d.w;
    std::tie(d.c4_poly, d.delta_poly) = c4_delta_polynomials(k, cls);
    return d;
}

WeierstrassCurve frey_curve_at_place(const Signature& k, const ParameterClass& cls,
                                     const ResiduePlace& place) {
    if (place.p != 3)
        throw std::invalid_argument(
            "no good-reduction guarantee wired for characteristic != 3");
    auto [A, B, C] = abc_polynomials(k, cls);
    (void)C;
    FieldElement Ab = reduce_mod_p(A, place.p).evaluate(place.xi_image);
    FieldElement Bb = reduce_mod_p(B, place.p).evaluate(place.xi_image);
    // x(x - A)(x + B) = x^3 + (B - A) x^2 - AB x
    const FieldPtr& F = place.field;
    WeierstrassCurve curve = WeierstrassCurve::degenerate(F->zero(), Bb - Ab, F->zero(),
                                                          -(Ab * Bb), F->zero());
    if (invariants(curve).delta.is_zero())
        throw InconsistencyError(
            "good-reduction guarantee contradicted: discriminant vanishes at r=" +
            std::to_string(place.r) + ", class " + cls.label());
    return curve;
}

static nlohmann::json coeff_list(const IntPolynomial& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
    return arr;
}

nlohmann::ordered_json to_json(const FreyData& d) {
    nlohmann::ordered_json j;
    j["k"] = d.k.label();
    j["class"] = d.cls.label();
    j["A"] = coeff_list(d.A);
    j["B"] = coeff_list(d.B);
    j["C"] = coeff_list(d.C);
    j["u"] = coeff_list(d.u);
    j["v"] = coeff_list(d.v);
    j["w"] = coeff_list(d.w);
    j["h"] = coeff_list(d.h);
    j["c4"] = coeff_list(d.c4_poly);
    j["delta"] = coeff_list(d.delta_poly);
    return j;
}

}  // namespace ordcert
