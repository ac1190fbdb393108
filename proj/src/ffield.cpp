#include "ordcert/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ordcert {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            unsigned m = 0;
            while (n % d == 0) { n /= d; ++m; }
            out.emplace_back(d, m);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

// Dense polynomial helpers over F_p, coefficients lowest-first, used for
// modulus search and element arithmetic.
using Poly = std::vector<std::uint32_t>;

void strip(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, std::uint32_t p, const Poly& mod) {
    const std::size_t f = mod.size() - 1;
    std::vector<std::uint64_t> r(a.size() + b.size() >= 1 ? a.size() + b.size() - 1 : 0, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    for (std::size_t i = r.size(); i-- > f;) {
        std::uint64_t c = r[i] % p;
        if (c) {
            for (std::size_t j = 0; j <= f; ++j) {
                std::uint64_t sub = c * mod[j] % p;
                std::size_t k = i - f + j;
                r[k] = (r[k] + p - sub) % p;
            }
        }
    }
    Poly out(f, 0);
    for (std::size_t i = 0; i < f && i < r.size(); ++i) out[i] = std::uint32_t(r[i] % p);
    return out;
}

Poly poly_pow_mod(Poly base, mpz_class e, std::uint32_t p, const Poly& mod) {
    Poly acc(mod.size() - 1, 0);
    if (!acc.empty()) acc[0] = 1;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = poly_mul_mod(acc, base, p, mod);
        base = poly_mul_mod(base, base, p, mod);
        e >>= 1;
    }
    return acc;
}

Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    strip(a);
    Poly bb = b;
    strip(bb);
    if (bb.empty()) throw std::invalid_argument("poly_rem: division by zero");
    std::uint64_t inv_lead = 1;
    {
        // Fermat inverse of lc(b)
        std::uint64_t base = bb.back(), e = p - 2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        inv_lead = acc;
    }
    while (a.size() >= bb.size()) {
        std::uint64_t c = std::uint64_t(a.back()) * inv_lead % p;
        if (c) {
            std::size_t off = a.size() - bb.size();
            for (std::size_t j = 0; j < bb.size(); ++j) {
                std::uint64_t sub = c * bb[j] % p;
                a[off + j] = std::uint32_t((a[off + j] + p - sub) % p);
            }
        }
        a.pop_back();
        strip(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^{p^k} mod m, by k successive p-th powers.
Poly frobenius_power(std::uint32_t k, std::uint32_t p, const Poly& mod) {
    const std::size_t f = mod.size() - 1;
    Poly x(f, 0);
    if (f >= 2) {
        x[1] = 1;
    } else {
        // f == 1: X reduces to the root of the (linear) modulus
        x[0] = std::uint32_t((p - mod[0] % p) % p);
    }
    Poly r = x;
    for (std::uint32_t i = 0; i < k; ++i) r = poly_pow_mod(r, p, p, mod);
    return r;
}

bool is_irreducible_modulus(const Poly& mod, std::uint32_t p) {
    const std::uint32_t f = std::uint32_t(mod.size() - 1);
    if (f == 1) return true;
    // X^{p^f} == X mod m, and gcd(X^{p^{f/q}} - X, m) = 1 for each prime q | f.
    Poly x(f, 0);
    x[1] = 1;
    Poly xf = frobenius_power(f, p, mod);
    if (xf != x) return false;
    for (auto [q, mult] : factorize(f)) {
        (void)mult;
        Poly xe = frobenius_power(f / std::uint32_t(q), p, mod);
        Poly diff = xe;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = std::uint32_t((diff[1] + p - 1) % p);
        Poly g = poly_gcd(mod, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree())
        throw std::invalid_argument("FieldElement: coefficient vector length mismatch");
    for (auto& c : coeffs_) c %= field_->characteristic();
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!ExtensionField::same_field(*a.field(), *b.field()))
        throw std::invalid_argument("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    std::uint32_t p = field_->characteristic();
    std::vector<std::uint32_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeffs_[i] + o.coeffs_[i]) % p;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(*this, o);
    std::uint32_t p = field_->characteristic();
    std::vector<std::uint32_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeffs_[i] + p - o.coeffs_[i]) % p;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::uint32_t p = field_->characteristic();
    std::vector<std::uint32_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (p - coeffs_[i]) % p;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(field_, poly_mul_mod(coeffs_, o.coeffs_, field_->characteristic(),
                                             field_->modulus()));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    // Extended Euclid in F_p[X] against the modulus.
    std::uint32_t p = field_->characteristic();
    Poly r0 = field_->modulus(), r1 = coeffs_;
    strip(r1);
    Poly t0, t1{1};
    while (!r1.empty()) {
        // q = r0 / r1
        Poly q;
        {
            Poly a = r0;
            strip(a);
            std::uint64_t lead_inv;
            {
                std::uint64_t base = r1.back(), e = p - 2, acc = 1;
                while (e) {
                    if (e & 1) acc = acc * base % p;
                    base = base * base % p;
                    e >>= 1;
                }
                lead_inv = acc;
            }
            if (a.size() >= r1.size()) q.assign(a.size() - r1.size() + 1, 0);
            while (a.size() >= r1.size()) {
                std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
                std::size_t off = a.size() - r1.size();
                q[off] = std::uint32_t(c);
                if (c)
                    for (std::size_t j = 0; j < r1.size(); ++j) {
                        std::uint64_t sub = c * r1[j] % p;
                        a[off + j] = std::uint32_t((a[off + j] + p - sub) % p);
                    }
                a.pop_back();
                strip(a);
            }
            r0 = std::move(r1);
            r1 = std::move(a);
        }
        // t0, t1 = t1, t0 - q*t1
        Poly qt(q.size() + t1.size() >= 1 ? q.size() + t1.size() - 1 : 0, 0);
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i])
                for (std::size_t j = 0; j < t1.size(); ++j)
                    qt[i + j] = std::uint32_t((qt[i + j] + std::uint64_t(q[i]) * t1[j]) % p);
        Poly nt(std::max(t0.size(), qt.size()), 0);
        for (std::size_t i = 0; i < nt.size(); ++i) {
            std::uint32_t a = i < t0.size() ? t0[i] : 0;
            std::uint32_t b = i < qt.size() ? qt[i] : 0;
            nt[i] = (a + p - b) % p;
        }
        strip(nt);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    // r0 is the gcd, a nonzero constant since the modulus is irreducible.
    std::uint64_t ginv;
    {
        std::uint64_t base = r0[0], e = p - 2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        ginv = acc;
    }
    Poly out(field_->degree(), 0);
    for (std::size_t i = 0; i < t0.size() && i < out.size(); ++i)
        out[i] = std::uint32_t(std::uint64_t(t0[i]) * ginv % p);
    return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    return FieldElement(field_, poly_pow_mod(coeffs_, e, field_->characteristic(),
                                             field_->modulus()));
}

bool FieldElement::operator==(const FieldElement& o) const {
    return ExtensionField::same_field(*field_, *o.field_) && coeffs_ == o.coeffs_;
}

std::uint64_t FieldElement::index() const {
    std::uint64_t idx = 0;
    std::uint32_t p = field_->characteristic();
    for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * p + coeffs_[i];
    return idx;
}

ExtensionField::ExtensionField(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus)
    : p_(p), f_(f), modulus_(std::move(modulus)) {}

FieldPtr ExtensionField::create(std::uint32_t p, std::uint32_t f) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (f < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (f == 1)
        return FieldPtr(new ExtensionField(p, 1, {0, 1}));
    // Scan monic moduli in lexicographic order of (c_0, c_1, ..., c_{f-1}).
    // c_0 = 0 means divisible by X, so the whole first block is skipped.
    std::vector<std::uint32_t> c(f, 0);
    c[0] = 1;
    for (;;) {
        Poly mod(c.begin(), c.end());
        mod.push_back(1);
        if (is_irreducible_modulus(mod, p))
            return FieldPtr(new ExtensionField(p, f, std::move(mod)));
        // increment with c_{f-1} least significant
        std::size_t i = f;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible modulus found");
        }
    }
}

FieldPtr ExtensionField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (auto& c : modulus) c %= p;
    modulus.back() = 1;
    if (!is_irreducible_modulus(modulus, p))
        throw std::invalid_argument("modulus is not irreducible");
    std::uint32_t f = std::uint32_t(modulus.size() - 1);
    return FieldPtr(new ExtensionField(p, f, std::move(modulus)));
}

mpz_class ExtensionField::order() const {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p_, f_);
    return q;
}

std::uint64_t ExtensionField::order_u64() const {
    mpz_class q = order();
    if (!q.fits_ulong_p()) throw CapExceededError("field order does not fit in 64 bits");
    return q.get_ui();
}

FieldElement ExtensionField::zero() const {
    return FieldElement(shared_from_this(), std::vector<std::uint32_t>(f_, 0));
}

FieldElement ExtensionField::one() const { return from_int(1); }

FieldElement ExtensionField::from_int(long long v) const {
    long long m = v % (long long)p_;
    if (m < 0) m += p_;
    std::vector<std::uint32_t> c(f_, 0);
    c[0] = std::uint32_t(m);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement ExtensionField::from_coeffs(const std::vector<long long>& cs) const {
    if (cs.size() > f_) throw std::invalid_argument("too many coefficients");
    std::vector<std::uint32_t> c(f_, 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        long long m = cs[i] % (long long)p_;
        if (m < 0) m += p_;
        c[i] = std::uint32_t(m);
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement ExtensionField::element_at(std::uint64_t idx) const {
    std::vector<std::uint32_t> c(f_, 0);
    for (std::uint32_t i = 0; i < f_; ++i) {
        c[i] = std::uint32_t(idx % p_);
        idx /= p_;
    }
    if (idx != 0) throw std::out_of_range("element index out of range");
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement ExtensionField::generator_x() const {
    if (f_ < 2) throw std::invalid_argument("generator_x requires degree >= 2");
    std::vector<std::uint32_t> c(f_, 0);
    c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

bool ExtensionField::same_field(const ExtensionField& a, const ExtensionField& b) {
    if (&a == &b) return true;
    return a.p_ == b.p_ && a.f_ == b.f_ && a.modulus_ == b.modulus_;
}

FieldPtr prime_field(std::uint32_t p) {
    static std::mutex mu;
    static std::map<std::uint32_t, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto f = ExtensionField::create(p, 1);
    cache.emplace(p, f);
    return f;
}

namespace {

// Factor q-1 for group-order computations. Trial division with a primality
// check on the cofactor; returns the prime factors, or nullopt when the
// cofactor resists both.
std::vector<mpz_class> group_order_prime_factors(const mpz_class& n, bool* complete) {
    std::vector<mpz_class> primes;
    mpz_class m = n;
    *complete = true;
    for (std::uint64_t d = 2; d <= 1u << 20 && mpz_class(d) * d <= m; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            primes.emplace_back(d);
            while (mpz_divisible_ui_p(m.get_mpz_t(), d)) m /= d;
        }
    }
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 32) > 0)
            primes.push_back(m);
        else
            *complete = false;
    }
    return primes;
}

}  // namespace

mpz_class element_order(const FieldElement& x) {
    if (x.is_zero()) throw std::invalid_argument("element_order: zero element");
    mpz_class n = x.field()->order() - 1;
    bool complete = false;
    auto primes = group_order_prime_factors(n, &complete);
    if (!complete) throw CapExceededError("element_order: cannot factor group order");
    for (const auto& ell : primes) {
        while (mpz_divisible_p(n.get_mpz_t(), ell.get_mpz_t())) {
            mpz_class m = n / ell;
            if (x.pow(m).is_one())
                n = m;
            else
                break;
        }
    }
    return n;
}

FieldElement element_of_order(const FieldPtr& field, std::uint64_t r) {
    mpz_class qm1 = field->order() - 1;
    if (!mpz_divisible_ui_p(qm1.get_mpz_t(), r))
        throw std::invalid_argument("no r-th roots of unity in this field: r does not divide p^f - 1");
    mpz_class e = qm1 / r;
    bool complete = false;
    auto primes = group_order_prime_factors(qm1, &complete);
    if (complete) {
        for (std::uint64_t idx = 1;; ++idx) {
            FieldElement g = field->element_at(idx);
            bool gen = true;
            for (const auto& ell : primes)
                if (g.pow(qm1 / ell).is_one()) {
                    gen = false;
                    break;
                }
            if (gen) return g.pow(e);
        }
    }
    // Group order not factorable at desk scale: first x whose (q-1)/r power is
    // nontrivial already has order exactly r (r prime).
    for (std::uint64_t idx = 1;; ++idx) {
        FieldElement y = field->element_at(idx).pow(e);
        if (!y.is_one() && !y.is_zero()) return y;
    }
}

std::uint64_t multiplicative_order_mod(std::uint64_t p, std::uint64_t r) {
    if (!is_prime(r)) throw std::invalid_argument("multiplicative_order_mod: r must be prime");
    if (r == p) throw std::invalid_argument("multiplicative_order_mod: r must differ from p");
    std::uint64_t acc = p % r, g = 1;
    while (acc != 1) {
        acc = acc * (p % r) % r;
        ++g;
        if (g > r) throw std::logic_error("order computation overran the group");
    }
    return g;
}

}  // namespace ordcert
