#include "ordcert/supersingular.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ordcert {

WeierstrassCurve::WeierstrassCurve(FieldElement a1_, FieldElement a2_, FieldElement a3_,
                                   FieldElement a4_, FieldElement a6_) {
    a1 = std::move(a1_);
    a2 = std::move(a2_);
    a3 = std::move(a3_);
    a4 = std::move(a4_);
    a6 = std::move(a6_);
    if (invariants(*this).delta.is_zero())
        throw std::invalid_argument("singular Weierstrass model (discriminant zero)");
}

WeierstrassCurve WeierstrassCurve::degenerate(FieldElement a1, FieldElement a2, FieldElement a3,
                                              FieldElement a4, FieldElement a6) {
    WeierstrassCurve c;
    c.a1 = std::move(a1);
    c.a2 = std::move(a2);
    c.a3 = std::move(a3);
    c.a4 = std::move(a4);
    c.a6 = std::move(a6);
    return c;
}

WeierstrassCurve WeierstrassCurve::short_form(const FieldPtr& field, long long a2, long long a4,
                                              long long a6) {
    return WeierstrassCurve(field->from_int(0), field->from_int(a2), field->from_int(0),
                            field->from_int(a4), field->from_int(a6));
}

CurveInvariants invariants(const WeierstrassCurve& e) {
    const auto& F = *e.field();
    auto k = [&](long long v) { return F.from_int(v); };
    CurveInvariants inv;
    inv.b2 = e.a1 * e.a1 + k(4) * e.a2;
    inv.b4 = k(2) * e.a4 + e.a1 * e.a3;
    inv.b6 = e.a3 * e.a3 + k(4) * e.a6;
    inv.b8 = e.a1 * e.a1 * e.a6 + k(4) * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
             e.a4 * e.a4;
    inv.c4 = inv.b2 * inv.b2 - k(24) * inv.b4;
    inv.c6 = -(inv.b2 * inv.b2 * inv.b2) + k(36) * inv.b2 * inv.b4 - k(216) * inv.b6;
    inv.delta = -(inv.b2 * inv.b2) * inv.b8 - k(8) * inv.b4 * inv.b4 * inv.b4 -
                k(27) * inv.b6 * inv.b6 + k(9) * inv.b2 * inv.b4 * inv.b6;
    if (!inv.delta.is_zero()) inv.j = inv.c4 * inv.c4 * inv.c4 * inv.delta.inverse();
    return inv;
}

namespace {

// Affine solution count in y for fixed x: y^2 + L y = R.
std::uint64_t solutions_for_x(const FieldElement& L, const FieldElement& R, std::uint32_t p,
                              std::uint64_t q) {
    const auto& F = L.field();
    if (p == 2) {
        if (L.is_zero()) return 1;  // squaring is a bijection
        // substitute y = L z: z^2 + z = R / L^2, solvable iff Tr(R/L^2) = 0
        FieldElement u = R * (L * L).inverse();
        FieldElement tr = u, term = u;
        for (std::uint32_t i = 1; i < F->degree(); ++i) {
            term = term * term;
            tr = tr + term;
        }
        return tr.is_zero() ? 2 : 0;
    }
    // odd characteristic: complete the square; discriminant D = L^2 + 4R
    FieldElement D = L * L + F->from_int(4) * R;
    if (D.is_zero()) return 1;
    FieldElement chi = D.pow(mpz_class((q - 1) / 2));
    return chi.is_one() ? 2 : 0;
}

std::uint64_t count_impl(const WeierstrassCurve& e, std::uint64_t cap, bool parallel) {
    mpz_class qz = e.field()->order();
    if (qz > cap)
        throw CapExceededError("exhaustive count infeasible: field order exceeds cap");
    std::uint64_t q = e.field()->order_u64();
    std::uint32_t p = e.field()->characteristic();
    std::uint64_t affine = 0;
    auto per_x = [&](std::uint64_t xi) -> std::uint64_t {
        FieldElement x = e.field()->element_at(xi);
        FieldElement L = e.a1 * x + e.a3;
        FieldElement R = ((x + e.a2) * x + e.a4) * x + e.a6;
        return solutions_for_x(L, R, p, q);
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : affine) schedule(static)
#endif
        for (long long xi = 0; xi < (long long)q; ++xi) affine += per_x(std::uint64_t(xi));
    } else {
        for (std::uint64_t xi = 0; xi < q; ++xi) affine += per_x(xi);
    }
    return affine + 1;  // point at infinity
}

}  // namespace

std::uint64_t point_count(const WeierstrassCurve& curve, std::uint64_t cap) {
    return count_impl(curve, cap, true);
}

std::uint64_t point_count_serial(const WeierstrassCurve& curve, std::uint64_t cap) {
    return count_impl(curve, cap, false);
}

std::int64_t trace_of_frobenius(const WeierstrassCurve& curve, std::uint64_t cap) {
    if (invariants(curve).delta.is_zero())
        throw std::invalid_argument("trace_of_frobenius: singular curve");
    std::uint64_t n = point_count(curve, cap);
    std::uint64_t q = curve.field()->order_u64();
    std::int64_t a = std::int64_t(q) + 1 - std::int64_t(n);
    if (double(a) * double(a) > 4.0 * double(q) + 1e-9)
        throw std::logic_error("Hasse bound violated; point count is wrong");
    return a;
}

bool is_ordinary(const WeierstrassCurve& curve, std::uint64_t cap) {
    std::int64_t a = trace_of_frobenius(curve, cap);
    return a % std::int64_t(curve.field()->characteristic()) != 0;
}

WeierstrassCurve curve_from_j(const FieldElement& j, int variant) {
    const FieldPtr& F = j.field();
    std::uint32_t p = F->characteristic();
    auto validated = [&](WeierstrassCurve c) {
        auto inv = invariants(c);
        if (inv.delta.is_zero() || !inv.j || *inv.j != j)
            throw std::logic_error("curve_from_j: representative has wrong invariants");
        return c;
    };
    if (p == 2) {
        if (j.is_zero()) {
            // y^2 + a3 y = x^3 (+ x for the second representative)
            return validated(WeierstrassCurve(F->from_int(0), F->from_int(0), F->from_int(1),
                                              F->from_int(variant == 0 ? 0 : 1), F->from_int(0)));
        }
        // y^2 + xy = x^3 (+ x^2) + 1/j
        return validated(WeierstrassCurve(F->from_int(1), F->from_int(variant == 0 ? 0 : 1),
                                          F->from_int(0), F->from_int(0), j.inverse()));
    }
    if (p == 3) {
        if (j.is_zero()) {
            // j = 0 = 1728: y^2 = x^3 + a4 x
            return validated(WeierstrassCurve(F->from_int(0), F->from_int(0), F->from_int(0),
                                              F->from_int(variant == 0 ? 1 : 2), F->from_int(0)));
        }
        // y^2 = x^3 + a2 x^2 + a6 with j = -a2^3/a6
        FieldElement a2 = F->from_int(variant == 0 ? 1 : 2);
        FieldElement a6 = -(a2 * a2 * a2) * j.inverse();
        return validated(WeierstrassCurve(F->from_int(0), a2, F->from_int(0), F->from_int(0), a6));
    }
    // p >= 5. Twist by the least non-square for the second representative.
    FieldElement d = F->one();
    if (variant != 0) {
        mpz_class e = (F->order() - 1) / 2;
        for (std::uint64_t idx = 2;; ++idx) {
            FieldElement cand = F->element_at(idx);
            if (!cand.is_zero() && !cand.pow(e).is_one()) {
                d = cand;
                break;
            }
        }
    }
    FieldElement d2 = d * d, d3 = d2 * d;
    if (j.is_zero())
        return validated(WeierstrassCurve(F->from_int(0), F->from_int(0), F->from_int(0),
                                          F->from_int(0), d3));
    if (j == F->from_int(1728))
        return validated(WeierstrassCurve(F->from_int(0), F->from_int(0), F->from_int(0), d2,
                                          F->from_int(0)));
    FieldElement k = j * (F->from_int(1728) - j).inverse();
    return validated(WeierstrassCurve(F->from_int(0), F->from_int(0), F->from_int(0),
                                      F->from_int(3) * k * d2, F->from_int(2) * k * d3));
}

namespace {

SupersingularSet ss_impl(std::uint32_t p, std::uint32_t cap, bool parallel) {
    if (!is_prime(p)) throw std::invalid_argument("supersingular_set: p must be prime");
    if (p > cap) throw CapExceededError("supersingular_set: p exceeds cap");
    FieldPtr Fq2 = ExtensionField::create(p, 2);
    std::uint64_t q2 = Fq2->order_u64();
    std::vector<char> hit(q2, 0);
    auto test_j = [&](std::uint64_t ji) {
        FieldElement j = Fq2->element_at(ji);
        WeierstrassCurve c = curve_from_j(j, 0);
        std::uint64_t n = point_count_serial(c, q2);
        std::int64_t a = std::int64_t(q2) + 1 - std::int64_t(n);
        if (a % std::int64_t(p) == 0) hit[ji] = 1;
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (long long ji = 0; ji < (long long)q2; ++ji) test_j(std::uint64_t(ji));
    } else {
        for (std::uint64_t ji = 0; ji < q2; ++ji) test_j(ji);
    }
    // merge in canonical element order
    FieldPolynomial poly = FieldPolynomial::one(Fq2);
    std::size_t count = 0;
    for (std::uint64_t ji = 0; ji < q2; ++ji) {
        if (!hit[ji]) continue;
        ++count;
        FieldPolynomial lin(Fq2, {-Fq2->element_at(ji), Fq2->one()});
        poly = poly * lin;
    }
    // Galois stability of B_p puts every coefficient in the prime field.
    FieldPtr Fp = prime_field(p);
    std::vector<FieldElement> coeffs;
    for (int i = 0; i <= poly.degree(); ++i) {
        const std::vector<std::uint32_t> c = poly.coeff(std::size_t(i)).coeffs();
        for (std::size_t k = 1; k < c.size(); ++k)
            if (c[k] != 0)
                throw std::logic_error("supersingular polynomial has a coefficient outside F_p");
        coeffs.push_back(Fp->from_int(c[0]));
    }
    return SupersingularSet{p, FieldPolynomial(Fp, std::move(coeffs)), count};
}

}  // namespace

SupersingularSet supersingular_set(std::uint32_t p, std::uint32_t cap) {
    return ss_impl(p, cap, true);
}

SupersingularSet supersingular_set_serial(std::uint32_t p, std::uint32_t cap) {
    return ss_impl(p, cap, false);
}

bool is_supersingular_j(const FieldElement& j, const SupersingularSet& ss) {
    if (j.field()->characteristic() != ss.p)
        throw std::invalid_argument("is_supersingular_j: characteristic mismatch");
    return ss.ss_poly.evaluate(j).is_zero();
}

// ---------------------------------------------------------------------------
// Disk cache

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string canonical_record(std::uint32_t p, const FieldPolynomial& poly) {
    std::ostringstream os;
    os << p << "|" << poly.degree();
    for (int i = 0; i <= poly.degree(); ++i) os << "|" << poly.coeff(std::size_t(i)).coeffs()[0];
    return os.str();
}

}  // namespace

void save_supersingular_cache(const std::string& path, const SupersingularSet& ss) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    out << "ordcert-supersingular-cache 1\n";
    out << "p " << ss.p << "\n";
    out << "degree " << ss.ss_poly.degree() << "\n";
    out << "coeffs";
    for (int i = 0; i <= ss.ss_poly.degree(); ++i)
        out << " " << ss.ss_poly.coeff(std::size_t(i)).coeffs()[0];
    out << "\n";
    out << "checksum " << std::hex << fnv1a(canonical_record(ss.p, ss.ss_poly)) << "\n";
}

std::optional<SupersingularSet> load_supersingular_cache(const std::string& path,
                                                         std::uint32_t p) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string header, version;
    if (!(in >> header >> version) || header != "ordcert-supersingular-cache" || version != "1")
        return std::nullopt;
    std::string key;
    std::uint32_t fp = 0;
    int deg = -2;
    if (!(in >> key >> fp) || key != "p" || fp != p) return std::nullopt;
    if (!(in >> key >> deg) || key != "degree" || deg < 0) return std::nullopt;
    if (!(in >> key) || key != "coeffs") return std::nullopt;
    std::vector<long long> coeffs(std::size_t(deg) + 1);
    for (auto& c : coeffs)
        if (!(in >> c) || c < 0 || c >= (long long)p) return std::nullopt;
    std::uint64_t sum = 0;
    if (!(in >> key >> std::hex >> sum) || key != "checksum") return std::nullopt;
    FieldPtr Fp = prime_field(p);
    FieldPolynomial poly = FieldPolynomial::from_ints(Fp, coeffs);
    if (poly.degree() != deg) return std::nullopt;
    if (fnv1a(canonical_record(p, poly)) != sum) return std::nullopt;
    return SupersingularSet{p, poly, std::size_t(deg)};
}

}  // namespace ordcert
