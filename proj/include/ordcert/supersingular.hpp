#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ordcert/polyring.hpp"

namespace ordcert {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over
/// a common field. The default constructor path rejects singular models; use
/// degenerate() to skip the check.
struct WeierstrassCurve {
    FieldElement a1, a2, a3, a4, a6;

    WeierstrassCurve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4,
                     FieldElement a6);
    static WeierstrassCurve degenerate(FieldElement a1, FieldElement a2, FieldElement a3,
                                       FieldElement a4, FieldElement a6);
    /// Short form y^2 = x^3 + a2 x^2 + a4 x + a6.
    static WeierstrassCurve short_form(const FieldPtr& field, long long a2, long long a4,
                                       long long a6);

    const FieldPtr& field() const { return a1.field(); }

  private:
    WeierstrassCurve() = default;
};

struct CurveInvariants {
    FieldElement b2, b4, b6, b8, c4, c6, delta;
    std::optional<FieldElement> j;  // only when delta != 0
};

CurveInvariants invariants(const WeierstrassCurve& curve);

inline constexpr std::uint64_t kDefaultPointCountCap = 531441;  // 3^12

/// Number of projective points, by full scan over x (OpenMP-parallel).
std::uint64_t point_count(const WeierstrassCurve& curve,
                          std::uint64_t cap = kDefaultPointCountCap);
/// Serial reference implementation of point_count.
std::uint64_t point_count_serial(const WeierstrassCurve& curve,
                                 std::uint64_t cap = kDefaultPointCountCap);

/// q + 1 - #E(F_q); asserts the Hasse bound. Requires a nonsingular curve.
std::int64_t trace_of_frobenius(const WeierstrassCurve& curve,
                                std::uint64_t cap = kDefaultPointCountCap);

/// True iff p does not divide the trace of Frobenius.
bool is_ordinary(const WeierstrassCurve& curve, std::uint64_t cap = kDefaultPointCountCap);

/// B_p encoded as the monic polynomial over F_p whose roots in F_{p^2} are
/// exactly the supersingular j-invariants.
struct SupersingularSet {
    std::uint32_t p;
    FieldPolynomial ss_poly;  // over F_p
    std::size_t count;        // = deg ss_poly
};

inline constexpr std::uint32_t kDefaultSupersingularCap = 97;

/// Enumerates all j in F_{p^2} and tests supersingularity by point counting
/// over F_{p^2} (OpenMP-parallel across j).
SupersingularSet supersingular_set(std::uint32_t p,
                                   std::uint32_t cap = kDefaultSupersingularCap);
/// Serial reference implementation of supersingular_set.
SupersingularSet supersingular_set_serial(std::uint32_t p,
                                          std::uint32_t cap = kDefaultSupersingularCap);

/// Membership of j (in any extension of F_p) in B_p, via evaluation of the
/// supersingular polynomial. No field embeddings needed.
bool is_supersingular_j(const FieldElement& j, const SupersingularSet& ss);

/// A curve over the field of j with that j-invariant. Two variants are
/// provided so callers can cross-check; both are validated internally.
WeierstrassCurve curve_from_j(const FieldElement& j, int variant = 0);

/// Versioned human-readable cache for supersingular sets. Corrupt or
/// mismatched files read as nullopt.
void save_supersingular_cache(const std::string& path, const SupersingularSet& ss);
std::optional<SupersingularSet> load_supersingular_cache(const std::string& path,
                                                         std::uint32_t p);

}  // namespace ordcert
