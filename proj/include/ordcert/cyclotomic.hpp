#pragma once

#include <cstdint>
#include <vector>

#include "ordcert/polyring.hpp"

namespace ordcert {

/// 1 + X + ... + X^{r-1} for prime r (X + 1 for r = 2).
IntPolynomial cyclotomic_polynomial(std::uint64_t r);

/// Monic minimal polynomial of xi_r = zeta_r + zeta_r^{-1} over Q, of degree
/// (r-1)/2, for an odd prime r.
IntPolynomial real_minimal_polynomial(std::uint64_t r);

/// The integer polynomial P_k with P_k(xi_1) = xi_k, via the recurrence
/// P_0 = 2, P_1 = X, P_k = X P_{k-1} - P_{k-2}.
IntPolynomial xi_in_power_basis(unsigned k);

/// X^{deg h} * h(X + 1/X), an integer polynomial of degree 2 deg h.
IntPolynomial reciprocal_substitution(const IntPolynomial& h);

/// A prime of the real cyclotomic field above p, realized as an irreducible
/// factor of psi_r mod p; the residue field is F_p[X]/(factor) and xi_image
/// is the class of X (a root of the factor).
struct ResiduePlace {
    std::uint64_t r;
    std::uint32_t p;
    FieldPtr field;
    FieldElement xi_image;
    FieldPolynomial min_poly;
    unsigned index;  // position in the canonical factor ordering
    unsigned degree() const { return unsigned(min_poly.degree()); }
};

/// Places of Q(xi_r) above p, one per irreducible factor of psi_r mod p,
/// ordered by factor lexicographic order. All factors share one degree.
std::vector<ResiduePlace> residue_places(std::uint64_t r, std::uint32_t p);

/// Same construction for the full cyclotomic field Q(zeta_r): factors of the
/// r-th cyclotomic polynomial mod p; xi_image is then the root of Phi_r.
std::vector<ResiduePlace> residue_places_cyclotomic(std::uint64_t r, std::uint32_t p);

/// Residue degree of p in Q(xi_r): ord_r(p), halved when p^(g/2) = -1 mod r.
std::uint64_t real_residue_degree(std::uint64_t r, std::uint32_t p);

/// All primes r >= r_min, r != p, with ord_r(p) <= d, from the prime factors
/// of p^f - 1 for f = 1..d. Enforces d <= 24.
std::vector<std::uint64_t> exceptional_primes(std::uint32_t p, unsigned d, std::uint64_t r_min);

/// All primes r >= r_min, r != p, whose real residue degree above p is <= d
/// (prime factors of p^f - 1 and p^f + 1, f = 1..d, filtered). Enforces d <= 24.
std::vector<std::uint64_t> exceptional_primes_by_place_degree(std::uint32_t p, unsigned d,
                                                              std::uint64_t r_min);

/// Norm data for h(xi_r). The resultant Res(psi_r, h) is the norm from
/// Q(xi_r); its square is the norm from Q(zeta_r), the value quoted by the
/// certifier and the CLI.
struct NormResult {
    mpz_class resultant;        // Res(psi_r, h)
    int sign;                   // sign of the resultant
    mpz_class cyclotomic_norm;  // resultant squared
};

NormResult norm(std::uint64_t r, const IntPolynomial& h);

}  // namespace ordcert
