#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordcert/freyfamily.hpp"

namespace ordcert {

inline constexpr const char* kCertificateVersion = "1.0.0";

enum class TowerKind { real_cyclotomic, full_cyclotomic };

enum class BoundKind { eq2, refined };

std::string bound_kind_to_string(BoundKind k);
BoundKind bound_kind_from_string(const std::string& s);

enum class Status { ordinary, fails, indeterminate, inconsistency };

std::string status_to_string(Status s);
Status status_from_string(const std::string& s);

/// One parameter class of a family: polynomials over F_p with C(z) = c4 and
/// D(z) = Delta at the tower generator z, plus an optional shortcut
/// polynomial h whose nonvanishing at z implies ordinarity.
struct ClassSpec {
    std::string label;
    FieldPolynomial C;
    FieldPolynomial D;
    std::optional<FieldPolynomial> h;
};

/// Everything the certification engine needs to know about a family of curves
/// over one of the two cyclotomic towers.
struct FamilyDescriptor {
    std::uint32_t p = 0;
    std::string family;
    std::string k_label;
    std::vector<ClassSpec> classes;
    TowerKind tower = TowerKind::real_cyclotomic;
    bool good_reduction_guaranteed = false;
    /// Optional concrete curve model per (class label, place); enables
    /// cross_validate. Empty function when the family is purely polynomial.
    std::function<WeierstrassCurve(const std::string&, const ResiduePlace&)> curve_at_place;
};

/// The shipped family: y^2 = x(x-A)(x+B) at p = 3, all three parameter
/// classes, with the h shortcut attached.
FamilyDescriptor frey_descriptor(const Signature& k);

struct DegreeBound {
    unsigned d = 0;
    BoundKind kind = BoundKind::refined;
    /// True when d came from the h shortcut (2 * max irreducible degree of h
    /// per class) rather than from C^3 - b D directly. Determines which
    /// residue-degree measure the exceptional-prime enumeration compares
    /// against d.
    bool via_h = false;
};

/// eq2: max over classes and b in the supersingular set of deg(C^3 - b D).
/// refined: same range, max irreducible factor degree instead of total
/// degree; with the h shortcut present on every class, d = max over classes
/// of 2 * max irreducible degree of h. Degrees involving b outside F_p are
/// measured over F_p (doubled).
DegreeBound degree_bound(const FamilyDescriptor& desc, const SupersingularSet& ss,
                         BoundKind kind);

struct PlaceReport {
    unsigned degree = 0;
    std::vector<std::pair<std::string, Status>> class_statuses;  // by class label
};

struct PrimeReport {
    std::uint64_t r = 0;
    std::vector<PlaceReport> places;
};

/// Direct residue-field check at every place of the tower at r: evaluate D at
/// the tower generator's image; zero means inconsistency (when good reduction
/// was guaranteed) or indeterminate; otherwise ordinary iff j = C^3/D avoids
/// the supersingular set. A division-free product form is recomputed
/// internally and must agree.
PrimeReport check_at_prime(const FamilyDescriptor& desc, std::uint64_t r,
                           const SupersingularSet& ss);

struct CertifyOptions {
    BoundKind bound = BoundKind::refined;
    std::uint64_t r_min = 7;
    /// Reuse a precomputed supersingular set (must match the family's p).
    const SupersingularSet* ss = nullptr;
};

struct Certificate {
    std::uint32_t p = 0;
    std::string family;
    std::string k_label;
    BoundKind bound_kind = BoundKind::refined;
    unsigned d = 0;
    std::uint64_t r_min = 0;
    std::vector<PrimeReport> exceptional;  // ascending in r
    std::uint64_t threshold = 0;           // r_min - 1 when nothing fails
    std::string version;
    std::string generated_at;  // RFC 3339; excluded from determinism claims
};

/// Degree bound, exceptional-prime enumeration, and per-prime checks,
/// assembled into a certificate: every family member over the r-th tower
/// level with r > threshold is ordinary at all places above p. An
/// inconsistency status anywhere aborts.
Certificate certify(const FamilyDescriptor& desc, const CertifyOptions& opts = {});

/// True iff at r the trace-based ordinarity test on the concrete curve models
/// agrees with check_at_prime's polynomial route at every class and place.
bool cross_validate(const FamilyDescriptor& desc, std::uint64_t r, const SupersingularSet& ss,
                    std::uint64_t cap = kDefaultPointCountCap);

nlohmann::ordered_json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace ordcert
