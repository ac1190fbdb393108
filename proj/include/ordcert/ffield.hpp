#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ordcert {

/// Raised when an exhaustive computation would exceed its configured cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a computation contradicts a mathematical guarantee taken as input.
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, ascending. Throws if n exceeds what
/// trial division can settle.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

class ExtensionField;
using FieldPtr = std::shared_ptr<const ExtensionField>;

/// An element of F_{p^f} in the polynomial quotient basis: a coefficient
/// vector of length f, entries in [0, p), lowest degree first.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<std::uint32_t> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(const mpz_class& e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Index in the canonical enumeration of the field (base-p digits,
    /// coefficient 0 least significant).
    std::uint64_t index() const;

  private:
    FieldPtr field_;
    std::vector<std::uint32_t> coeffs_;
};

/// F_{p^f} as F_p[X]/(modulus), modulus monic irreducible of degree f.
/// Immutable; share via FieldPtr.
class ExtensionField : public std::enable_shared_from_this<ExtensionField> {
  public:
    /// Field with the deterministically chosen modulus: the lexicographically
    /// least (by coefficient sequence c_0, c_1, ..., c_{f-1}) monic
    /// irreducible of degree f over F_p.
    static FieldPtr create(std::uint32_t p, std::uint32_t f);

    /// Field with a caller-supplied monic modulus (lowest degree first,
    /// length f+1). Irreducibility is verified.
    static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return f_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    mpz_class order() const;
    /// p^f as uint64; throws if it does not fit.
    std::uint64_t order_u64() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// Constant embedding of an integer (reduced mod p).
    FieldElement from_int(long long v) const;
    FieldElement from_coeffs(const std::vector<long long>& c) const;
    /// The element whose base-p digit expansion is idx (inverse of
    /// FieldElement::index).
    FieldElement element_at(std::uint64_t idx) const;
    /// The class of X; the root of the modulus inside the field (f >= 2).
    FieldElement generator_x() const;

    static bool same_field(const ExtensionField& a, const ExtensionField& b);

  private:
    ExtensionField(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus);
    std::uint32_t p_;
    std::uint32_t f_;
    std::vector<std::uint32_t> modulus_;
};

/// Cached handle for F_p (modulus X).
FieldPtr prime_field(std::uint32_t p);

/// Least n >= 1 with x^n = 1. x must be nonzero; n divides p^f - 1.
mpz_class element_order(const FieldElement& x);

/// An element of exact multiplicative order r, as g^((p^f-1)/r) for the
/// deterministically-first generator g. Requires r | p^f - 1.
FieldElement element_of_order(const FieldPtr& field, std::uint64_t r);

/// ord_r(p), the least g >= 1 with p^g = 1 (mod r). Requires r prime, r != p.
std::uint64_t multiplicative_order_mod(std::uint64_t p, std::uint64_t r);

}  // namespace ordcert
