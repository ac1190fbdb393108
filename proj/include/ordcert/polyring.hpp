#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ordcert/ffield.hpp"

namespace ordcert {

/// Univariate polynomial with exact integer coefficients, lowest degree first,
/// optionally scaled by 1/den with den > 0. Trailing zeros are stripped.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs, mpz_class den = 1);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial x();
    static IntPolynomial constant(const mpz_class& v);

    int degree() const { return int(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& denominator() const { return den_; }
    mpz_class coeff(std::size_t i) const;
    const mpz_class& leading() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const mpz_class& s) const;
    IntPolynomial pow(unsigned e) const;
    bool operator==(const IntPolynomial& o) const;
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    mpz_class evaluate(const mpz_class& x) const;  // requires den == 1

    std::string str(const std::string& var = "X") const;

  private:
    void normalize();
    std::vector<mpz_class> coeffs_;
    mpz_class den_{1};
};

/// Univariate polynomial over F_{p^f}, lowest degree first, canonical degree.
class FieldPolynomial {
  public:
    FieldPolynomial() = default;
    FieldPolynomial(FieldPtr field, std::vector<FieldElement> coeffs);

    static FieldPolynomial zero(const FieldPtr& field);
    static FieldPolynomial one(const FieldPtr& field);
    static FieldPolynomial x(const FieldPtr& field);
    /// From integer coefficients, reduced into the field (as constants).
    static FieldPolynomial from_ints(const FieldPtr& field, const std::vector<long long>& coeffs);

    const FieldPtr& field() const { return field_; }
    int degree() const { return int(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(std::size_t i) const;
    const FieldElement& leading() const;
    bool is_monic() const;
    FieldPolynomial monic() const;

    FieldPolynomial operator+(const FieldPolynomial& o) const;
    FieldPolynomial operator-(const FieldPolynomial& o) const;
    FieldPolynomial operator*(const FieldPolynomial& o) const;
    FieldPolynomial operator*(const FieldElement& s) const;
    bool operator==(const FieldPolynomial& o) const;
    bool operator!=(const FieldPolynomial& o) const { return !(*this == o); }

    std::pair<FieldPolynomial, FieldPolynomial> divmod(const FieldPolynomial& d) const;
    FieldPolynomial operator%(const FieldPolynomial& d) const { return divmod(d).second; }
    FieldPolynomial operator/(const FieldPolynomial& d) const { return divmod(d).first; }
    FieldPolynomial derivative() const;
    FieldPolynomial pow_mod(const mpz_class& e, const FieldPolynomial& mod) const;

    /// Horner evaluation. x may live in the same field, or in an extension of
    /// F_p when the coefficients lie in the prime field (constant embedding).
    FieldElement evaluate(const FieldElement& x) const;

    /// Deterministic ordering: by degree, then coefficient indices high to low.
    static bool lex_less(const FieldPolynomial& a, const FieldPolynomial& b);

    std::string str(const std::string& var = "X") const;

  private:
    void normalize();
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

FieldPolynomial gcd(const FieldPolynomial& a, const FieldPolynomial& b);

/// Coefficientwise reduction mod p; an optional denominator is inverted mod p.
FieldPolynomial reduce_mod_p(const IntPolynomial& f, std::uint32_t p);

/// Monic irreducible factors with multiplicities, sorted deterministically.
/// The product of the factors times the leading coefficient equals the input.
std::vector<std::pair<FieldPolynomial, unsigned>> factor(const FieldPolynomial& f);

unsigned max_irreducible_degree(const FieldPolynomial& f);

bool is_irreducible(const FieldPolynomial& f);

/// Resultant of two nonzero integer polynomials (den == 1 required), via the
/// subresultant polynomial-remainder sequence.
mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Gcd over Q of two integer polynomials, returned primitive over Z.
IntPolynomial int_gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace ordcert
