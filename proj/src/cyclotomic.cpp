#include "ordcert/cyclotomic.hpp"

#include <algorithm>
#include <set>

namespace ordcert {

IntPolynomial cyclotomic_polynomial(std::uint64_t r) {
    if (!is_prime(r)) throw std::invalid_argument("cyclotomic_polynomial: r must be prime");
    std::vector<mpz_class> c(std::size_t(r), mpz_class(1));
    return IntPolynomial(std::move(c));
}

IntPolynomial xi_in_power_basis(unsigned k) {
    IntPolynomial p0 = IntPolynomial::constant(2);
    if (k == 0) return p0;
    IntPolynomial p1 = IntPolynomial::x();
    if (k == 1) return p1;
    IntPolynomial x = IntPolynomial::x();
    for (unsigned i = 2; i <= k; ++i) {
        IntPolynomial next = x * p1 - p0;
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

IntPolynomial real_minimal_polynomial(std::uint64_t r) {
    if (r == 2 || !is_prime(r))
        throw std::invalid_argument("real_minimal_polynomial: r must be an odd prime");
    // Phi_r(y)/y^m = 1 + sum_{k=1}^{m} (y^k + y^{-k}) with m = (r-1)/2, and
    // y^k + y^{-k} = P_k(y + 1/y).
    unsigned m = unsigned((r - 1) / 2);
    IntPolynomial psi = IntPolynomial::constant(1);
    for (unsigned k = 1; k <= m; ++k) psi = psi + xi_in_power_basis(k);
    return psi;
}

IntPolynomial reciprocal_substitution(const IntPolynomial& h) {
    if (h.is_zero()) return h;
    if (h.denominator() != 1)
        throw std::invalid_argument("reciprocal_substitution: integer coefficients required");
    int m = h.degree();
    // sum_k h_k (X^2+1)^k X^{m-k}
    IntPolynomial x2p1({1, 0, 1});
    IntPolynomial out;
    for (int k = 0; k <= m; ++k) {
        IntPolynomial term = x2p1.pow(unsigned(k)) * h.coeff(std::size_t(k));
        std::vector<mpz_class> shift(std::size_t(m - k), mpz_class(0));
        shift.push_back(1);
        out = out + term * IntPolynomial(std::move(shift));
    }
    return out;
}

namespace {

std::vector<ResiduePlace> places_from(const IntPolynomial& minpoly, std::uint64_t r,
                                      std::uint32_t p) {
    if (p == r) throw std::invalid_argument("residue places: p ramifies at p = r");
    FieldPolynomial reduced = reduce_mod_p(minpoly, p);
    auto factors = factor(reduced);
    std::vector<ResiduePlace> out;
    unsigned common_degree = 0;
    for (const auto& [fac, mult] : factors) {
        if (mult != 1) throw std::logic_error("residue places: repeated factor at unramified p");
        if (common_degree == 0)
            common_degree = unsigned(fac.degree());
        else if (common_degree != unsigned(fac.degree()))
            throw std::logic_error("residue places: factor degrees differ in a Galois field");
    }
    unsigned idx = 0;
    for (const auto& [fac, mult] : factors) {
        (void)mult;
        std::vector<std::uint32_t> mod;
        mod.reserve(std::size_t(fac.degree()) + 1);
        for (int i = 0; i <= fac.degree(); ++i)
            mod.push_back(fac.coeff(std::size_t(i)).coeffs()[0]);
        FieldPtr field = fac.degree() == 1
                             ? prime_field(p)
                             : ExtensionField::with_modulus(p, std::move(mod));
        FieldElement xi = fac.degree() == 1
                              ? field->from_int(long(p) - long(fac.coeff(0).coeffs()[0]))
                              : field->generator_x();
        out.push_back(ResiduePlace{r, p, field, xi, fac, idx++});
    }
    return out;
}

}  // namespace

std::vector<ResiduePlace> residue_places(std::uint64_t r, std::uint32_t p) {
    return places_from(real_minimal_polynomial(r), r, p);
}

std::vector<ResiduePlace> residue_places_cyclotomic(std::uint64_t r, std::uint32_t p) {
    return places_from(cyclotomic_polynomial(r), r, p);
}

std::uint64_t real_residue_degree(std::uint64_t r, std::uint32_t p) {
    std::uint64_t g = multiplicative_order_mod(p, r);
    if (g % 2 == 0) {
        // f = g/2 exactly when p^(g/2) = -1 (mod r)
        std::uint64_t acc = 1, base = p % r, e = g / 2;
        std::uint64_t b = base;
        while (e) {
            if (e & 1) acc = (unsigned __int128)acc * b % r;
            b = (unsigned __int128)b * b % r;
            e >>= 1;
        }
        if (acc == r - 1) return g / 2;
    }
    return g;
}

namespace {

constexpr unsigned kMaxEnumerationDegree = 24;

void collect_prime_factors(const mpz_class& n, std::set<std::uint64_t>& out) {
    mpz_class m = n;
    for (std::uint64_t d = 2; mpz_class(d) * d <= m; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            out.insert(d);
            while (mpz_divisible_ui_p(m.get_mpz_t(), d)) m /= d;
        }
    }
    if (m > 1) {
        if (!m.fits_ulong_p())
            throw CapExceededError("exceptional prime enumeration: factor does not fit in 64 bits");
        out.insert(m.get_ui());
    }
}

}  // namespace

std::vector<std::uint64_t> exceptional_primes(std::uint32_t p, unsigned d, std::uint64_t r_min) {
    if (d < 1) throw std::invalid_argument("exceptional_primes: d must be >= 1");
    if (d > kMaxEnumerationDegree)
        throw CapExceededError("exceptional_primes: degree bound " + std::to_string(d) +
                               " exceeds the enumeration cap " +
                               std::to_string(kMaxEnumerationDegree));
    std::set<std::uint64_t> candidates;
    for (unsigned f = 1; f <= d; ++f) {
        mpz_class n;
        mpz_ui_pow_ui(n.get_mpz_t(), p, f);
        collect_prime_factors(n - 1, candidates);
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t r : candidates)
        if (r >= r_min && r != p && multiplicative_order_mod(p, r) <= d) out.push_back(r);
    return out;
}

std::vector<std::uint64_t> exceptional_primes_by_place_degree(std::uint32_t p, unsigned d,
                                                              std::uint64_t r_min) {
    if (d < 1) throw std::invalid_argument("exceptional_primes_by_place_degree: d must be >= 1");
    if (d > kMaxEnumerationDegree)
        throw CapExceededError("exceptional prime enumeration: degree bound " +
                               std::to_string(d) + " exceeds the enumeration cap " +
                               std::to_string(kMaxEnumerationDegree));
    // f_r <= d means xi_r mod p lies in F_{p^f} for some f <= d, i.e. r divides
    // p^f - 1 or p^f + 1.
    std::set<std::uint64_t> candidates;
    for (unsigned f = 1; f <= d; ++f) {
        mpz_class n;
        mpz_ui_pow_ui(n.get_mpz_t(), p, f);
        collect_prime_factors(n - 1, candidates);
        collect_prime_factors(n + 1, candidates);
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t r : candidates)
        if (r >= r_min && r != p && r != 2 && real_residue_degree(r, p) <= d) out.push_back(r);
    return out;
}

NormResult norm(std::uint64_t r, const IntPolynomial& h) {
    IntPolynomial psi = real_minimal_polynomial(r);
    mpz_class res = resultant(psi, h);
    NormResult out;
    out.resultant = res;
    out.sign = res > 0 ? 1 : (res < 0 ? -1 : 0);
    out.cyclotomic_norm = res * res;
    return out;
}

}  // namespace ordcert
