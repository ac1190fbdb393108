// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion re-derives its expected values independently of the
// unit tests (brute-force oracles, symbolic identities, frozen constants).
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ordcert/certifier.hpp"

#include "oracle_fp2.h"

using namespace ordcert;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d: %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                secs, note.c_str());
    if (!ok) ++g_failures;
}

const Signature kSig123{1, 2, 3};
const Signature kSig124{1, 2, 4};

bool all_ordinary(const PrimeReport& report) {
    for (const auto& place : report.places)
        for (const auto& [label, st] : place.class_statuses)
            if (st != Status::ordinary) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "supersingular set at p = 3 is exactly {0}", [] {
        SupersingularSet ss = supersingular_set(3);
        return ss.count == 1 && ss.ss_poly == FieldPolynomial::x(prime_field(3));
    });

    criterion(2, "supersingular sets match an independent brute-force oracle", [] {
        for (std::uint32_t p : {2u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
            SupersingularSet ss = supersingular_set(p);
            oracle::Fp2 F(p);
            std::size_t count = 0;
            for (const auto& j : F.all()) {
                bool oracle_ss = oracle::is_supersingular(F, j);
                oracle::Fp2::E acc = F.from_int(0), power = F.from_int(1);
                for (int i = 0; i <= ss.ss_poly.degree(); ++i) {
                    acc = F.add(acc,
                                F.mul(F.from_int(ss.ss_poly.coeff(std::size_t(i)).coeffs()[0]),
                                      power));
                    power = F.mul(power, j);
                }
                if (oracle_ss != F.is_zero(acc)) return false;
                if (oracle_ss) ++count;
            }
            if (count != ss.count) return false;
        }
        return true;
    });

    criterion(3, "h mod 3 factors as (1+X)(2+X)(2+X+X^2+X^3), deg h = 5", [] {
        IntPolynomial h = h_polynomial(kSig123, ParameterClass{1, 1});
        if (h.degree() != 5) return false;
        FieldPtr F3 = prime_field(3);
        auto factors = factor(reduce_mod_p(h, 3));
        std::multiset<std::string> got, want{"1+1X", "2+1X", "2+1X+1X^2+1X^3"};
        for (const auto& [fac, mult] : factors) {
            if (mult != 1) return false;
            std::string s;
            for (int i = 0; i <= fac.degree(); ++i) {
                if (i) s += "+";
                s += std::to_string(fac.coeff(std::size_t(i)).coeffs()[0]) + (i ? "X" : "");
                if (i > 1) s += "^" + std::to_string(i);
            }
            got.insert(s);
        }
        return got == want;
    });

    criterion(4, "exceptional primes for p = 3, d = 6, from 7: exactly {7, 11, 13}", [] {
        return exceptional_primes(3, 6, 7) == std::vector<std::uint64_t>{7, 11, 13};
    });

    criterion(5, "norm table at r = 7, 11, 13: |norm| = 0, 121, 169", [] {
        IntPolynomial h = h_polynomial(kSig123, ParameterClass{1, 1});
        return abs(norm(7, h).cyclotomic_norm) == 0 && abs(norm(11, h).cyclotomic_norm) == 121 &&
               abs(norm(13, h).cyclotomic_norm) == 169;
    });

    criterion(6, "both signatures certify with threshold 7; 11 and 13 fully ordinary", [] {
        SupersingularSet ss = supersingular_set(3);
        for (const Signature& k : {kSig123, kSig124}) {
            CertifyOptions opts;
            opts.ss = &ss;
            Certificate cert = certify(frey_descriptor(k), opts);
            if (cert.threshold != 7) return false;
            bool some_failure_at_7 = false;
            for (const auto& pr : cert.exceptional) {
                if (pr.r == 7) some_failure_at_7 = !all_ordinary(pr);
                if (pr.r == 11 || pr.r == 13)
                    if (!all_ordinary(pr)) return false;
            }
            if (!some_failure_at_7) return false;
        }
        return true;
    });

    criterion(7, "polynomial route agrees with exhaustive point counting at r = 7, 11, 13", [] {
        SupersingularSet ss = supersingular_set(3);
        FamilyDescriptor desc = frey_descriptor(kSig123);
        for (std::uint64_t r : {7ull, 11ull, 13ull})
            if (!cross_validate(desc, r, ss, 243)) return false;
        return true;
    });

    criterion(8, "symbolic identity suite", [] {
        for (const Signature& k : {kSig123, kSig124}) {
            for (const ParameterClass& cls : canonical_classes()) {
                auto [A, B, C] = abc_polynomials(k, cls);
                if (!(A + B + C).is_zero()) return false;
                auto [u, v, w] = uvw_decomposition(k, cls);
                if (A != v - w || B != w - u || C != u - v) return false;
                IntPolynomial s = u + v + w;
                IntPolynomial cubes = u.pow(3) + v.pow(3) + w.pow(3);
                IntPolynomial rhs = s * ((w - v).pow(2) + (u - w).pow(2) + (v - u).pow(2)) +
                                    u * v * w * mpz_class(6);
                if (cubes * mpz_class(2) != rhs) return false;
                IntPolynomial diff = s.pow(3) - cubes;
                for (const auto& c : diff.coeffs())
                    if (c % 3 != 0) return false;
            }
        }
        for (unsigned k = 2; k <= 12; ++k) {
            IntPolynomial rhs = IntPolynomial::x().pow(k);
            for (unsigned j = 1; 2 * j < k; ++j) {
                mpz_class c;
                mpz_bin_uiui(c.get_mpz_t(), k, j);
                rhs = rhs - xi_in_power_basis(k - 2 * j) * c;
            }
            if (k % 2 == 0) {
                mpz_class c;
                mpz_bin_uiui(c.get_mpz_t(), k, k / 2);
                rhs = rhs - IntPolynomial::constant(c);
            }
            if (xi_in_power_basis(k) != rhs) return false;
        }
        for (std::uint64_t r = 3; r <= 50; r += 2) {
            if (!is_prime(r)) continue;
            if (reciprocal_substitution(real_minimal_polynomial(r)) != cyclotomic_polynomial(r))
                return false;
        }
        return true;
    });

    criterion(9, "residue structure at p = 3 for all odd primes r <= 50", [] {
        for (std::uint64_t r = 5; r <= 50; r += 2) {
            if (!is_prime(r) || r == 3) continue;
            std::uint64_t g = multiplicative_order_mod(3, r);
            std::uint64_t f = real_residue_degree(r, 3);
            if (f != g && 2 * f != g) return false;
            auto places = residue_places(r, 3);
            for (const auto& place : places)
                if (place.degree() != f) return false;
            if (f * places.size() != (r - 1) / 2) return false;
        }
        return true;
    });

    criterion(10, "property tests: Hasse bound, factorization round-trip, resultants", [] {
        std::mt19937_64 rng(2026);
        // 500 random nonsingular curves over fields of order <= 3^6
        int curves = 0;
        while (curves < 500) {
            std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[rng() % 3];
            std::uint32_t fmax = p == 2 ? 9 : (p == 3 ? 6 : 4);  // order <= 729
            FieldPtr F = ExtensionField::create(p, 1 + std::uint32_t(rng() % fmax));
            std::uint64_t q = F->order_u64();
            if (q > 729) continue;
            WeierstrassCurve e = WeierstrassCurve::degenerate(
                F->element_at(rng() % q), F->element_at(rng() % q), F->element_at(rng() % q),
                F->element_at(rng() % q), F->element_at(rng() % q));
            if (invariants(e).delta.is_zero()) continue;
            std::int64_t a = trace_of_frobenius(e);  // throws when Hasse fails
            if (std::int64_t(a) * a > 4 * std::int64_t(q)) return false;
            ++curves;
        }
        // 500 random polynomials: factor and re-multiply
        for (int trial = 0; trial < 500; ++trial) {
            std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
            FieldPtr F = prime_field(p);
            int deg = 1 + int(rng() % 12);
            std::vector<FieldElement> cs;
            for (int i = 0; i < deg; ++i) cs.push_back(F->element_at(rng() % p));
            cs.push_back(F->element_at(1 + rng() % (p - 1)));
            FieldPolynomial f(F, cs);
            FieldPolynomial prod = FieldPolynomial::one(F) * f.leading();
            for (const auto& [g, mult] : factor(f))
                for (unsigned m = 0; m < mult; ++m) prod = prod * g;
            if (prod != f) return false;
        }
        // resultants of integer-rooted monic polynomials vs the root product
        for (int trial = 0; trial < 200; ++trial) {
            int df = 1 + int(rng() % 4), dg = 1 + int(rng() % 4);
            std::vector<long> fr, gr;
            IntPolynomial f{1}, g{1};
            for (int i = 0; i < df; ++i) {
                long a = long(rng() % 13) - 6;
                fr.push_back(a);
                f = f * IntPolynomial{-a, 1};
            }
            for (int i = 0; i < dg; ++i) {
                long b = long(rng() % 13) - 6;
                gr.push_back(b);
                g = g * IntPolynomial{-b, 1};
            }
            mpz_class expected = 1;
            for (long a : fr)
                for (long b : gr) expected *= mpz_class(a - b);
            if (resultant(f, g) != expected) return false;
        }
        return true;
    });

    return g_failures == 0 ? 0 : 1;
}
