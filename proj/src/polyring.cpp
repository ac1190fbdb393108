#include "ordcert/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace ordcert {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs, mpz_class den)
    : coeffs_(std::move(coeffs)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : coeffs_) c = -c;
    }
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ != 1) {
        mpz_class g = den_;
        for (const auto& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        if (g > 1) {
            for (auto& c : coeffs_) c /= g;
            den_ /= g;
        }
    }
}

IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

IntPolynomial IntPolynomial::constant(const mpz_class& v) {
    return IntPolynomial(std::vector<mpz_class>{v});
}

mpz_class IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

const mpz_class& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading of zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(i) * o.den_ + o.coeff(i) * den_;
    return IntPolynomial(std::move(c), den_ * o.den_);
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> c = coeffs_;
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c), den_);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c), den_ * o.den_);
}

IntPolynomial IntPolynomial::operator*(const mpz_class& s) const {
    std::vector<mpz_class> c = coeffs_;
    for (auto& v : c) v *= s;
    return IntPolynomial(std::move(c), den_);
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial acc = constant(1), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool IntPolynomial::operator==(const IntPolynomial& o) const {
    return coeffs_ == o.coeffs_ && den_ == o.den_;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    if (den_ != 1) throw std::invalid_argument("evaluate requires integral coefficients");
    mpz_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    if (den_ != 1) return "(" + os.str() + ")/" + den_.get_str();
    return os.str();
}

// ---------------------------------------------------------------------------
// FieldPolynomial

FieldPolynomial::FieldPolynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!ExtensionField::same_field(*c.field(), *field_))
            throw std::invalid_argument("coefficient from a different field");
    normalize();
}

void FieldPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldPolynomial FieldPolynomial::zero(const FieldPtr& field) { return FieldPolynomial(field, {}); }

FieldPolynomial FieldPolynomial::one(const FieldPtr& field) {
    return FieldPolynomial(field, {field->one()});
}

FieldPolynomial FieldPolynomial::x(const FieldPtr& field) {
    return FieldPolynomial(field, {field->zero(), field->one()});
}

FieldPolynomial FieldPolynomial::from_ints(const FieldPtr& field,
                                           const std::vector<long long>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.push_back(field->from_int(v));
    return FieldPolynomial(field, std::move(c));
}

FieldElement FieldPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

const FieldElement& FieldPolynomial::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading of zero polynomial");
    return coeffs_.back();
}

bool FieldPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

FieldPolynomial FieldPolynomial::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
    if (is_monic()) return *this;
    return *this * leading().inverse();
}

FieldPolynomial FieldPolynomial::operator+(const FieldPolynomial& o) const {
    std::vector<FieldElement> c;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(coeff(i) + o.coeff(i));
    return FieldPolynomial(field_, std::move(c));
}

FieldPolynomial FieldPolynomial::operator-(const FieldPolynomial& o) const {
    std::vector<FieldElement> c;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(coeff(i) - o.coeff(i));
    return FieldPolynomial(field_, std::move(c));
}

FieldPolynomial FieldPolynomial::operator*(const FieldPolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return FieldPolynomial(field_, std::move(c));
}

FieldPolynomial FieldPolynomial::operator*(const FieldElement& s) const {
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(v * s);
    return FieldPolynomial(field_, std::move(c));
}

bool FieldPolynomial::operator==(const FieldPolynomial& o) const { return coeffs_ == o.coeffs_; }

std::pair<FieldPolynomial, FieldPolynomial> FieldPolynomial::divmod(
    const FieldPolynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    FieldPolynomial r = *this;
    if (degree() < d.degree()) return {zero(field_), r};
    std::vector<FieldElement> q(coeffs_.size() - d.coeffs_.size() + 1, field_->zero());
    FieldElement inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        FieldElement c = r.leading() * inv;
        std::size_t off = std::size_t(r.degree() - d.degree());
        q[off] = c;
        std::vector<FieldElement> sub(off + d.coeffs_.size(), field_->zero());
        for (std::size_t j = 0; j < d.coeffs_.size(); ++j) sub[off + j] = d.coeffs_[j] * c;
        r = r - FieldPolynomial(field_, std::move(sub));
    }
    return {FieldPolynomial(field_, std::move(q)), r};
}

FieldPolynomial FieldPolynomial::derivative() const {
    std::vector<FieldElement> c;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * field_->from_int((long long)i));
    return FieldPolynomial(field_, std::move(c));
}

FieldPolynomial FieldPolynomial::pow_mod(const mpz_class& e, const FieldPolynomial& mod) const {
    FieldPolynomial acc = one(field_);
    FieldPolynomial base = *this % mod;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = (acc * base) % mod;
        base = (base * base) % mod;
        k >>= 1;
    }
    return acc;
}

FieldElement FieldPolynomial::evaluate(const FieldElement& x) const {
    const auto& xf = *x.field();
    bool same = ExtensionField::same_field(*field_, xf);
    if (!same) {
        // allowed lift: coefficients in F_p, x in an extension of F_p
        if (field_->degree() != 1 || field_->characteristic() != xf.characteristic())
            throw std::invalid_argument("evaluate: field mismatch");
    }
    FieldElement acc = x.field()->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        FieldElement c = same ? coeffs_[i] : x.field()->from_int(coeffs_[i].coeffs()[0]);
        acc = acc * x + c;
    }
    return acc;
}

bool FieldPolynomial::lex_less(const FieldPolynomial& a, const FieldPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        std::uint64_t ia = a.coeffs_[i].index(), ib = b.coeffs_[i].index();
        if (ia != ib) return ia < ib;
    }
    return false;
}

std::string FieldPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const FieldElement& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << "+";
        first = false;
        if (field_->degree() == 1) {
            if (i == 0 || !c.is_one()) os << c.coeffs()[0];
        } else {
            os << "(";
            bool inner_first = true;
            for (std::size_t k = c.coeffs().size(); k-- > 0;) {
                if (!c.coeffs()[k]) continue;
                if (!inner_first) os << "+";
                inner_first = false;
                if (k == 0 || c.coeffs()[k] != 1) os << c.coeffs()[k];
                if (k >= 1) {
                    os << "t";
                    if (k >= 2) os << "^" << k;
                }
            }
            os << ")";
        }
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

FieldPolynomial gcd(const FieldPolynomial& a, const FieldPolynomial& b) {
    FieldPolynomial x = a, y = b;
    while (!y.is_zero()) {
        FieldPolynomial r = x % y;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

FieldPolynomial reduce_mod_p(const IntPolynomial& f, std::uint32_t p) {
    auto field = prime_field(p);
    mpz_class den = f.denominator();
    if (mpz_divisible_ui_p(den.get_mpz_t(), p))
        throw std::invalid_argument("not p-integral: denominator divisible by p");
    mpz_class dinv;
    mpz_class pz = p;
    if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()))
        throw std::invalid_argument("denominator not invertible mod p");
    std::vector<FieldElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        mpz_class m = v * dinv % pz;
        if (m < 0) m += pz;
        c.push_back(field->from_int((long long)m.get_ui()));
    }
    return FieldPolynomial(field, std::move(c));
}

// ---------------------------------------------------------------------------
// Factorization over F_q

namespace {

// Inverse Frobenius on coefficients: p-th root of a polynomial in X^p.
FieldPolynomial pth_root(const FieldPolynomial& f) {
    const auto& field = f.field();
    std::uint32_t p = field->characteristic();
    mpz_class e = field->order() / p;  // a^(q/p) is the p-th root of a
    std::vector<FieldElement> c;
    for (int i = 0; i <= f.degree(); i += int(p)) c.push_back(f.coeff(std::size_t(i)).pow(e));
    return FieldPolynomial(field, std::move(c));
}

void squarefree_decompose(const FieldPolynomial& f, unsigned e,
                          std::vector<std::pair<FieldPolynomial, unsigned>>& out) {
    if (f.degree() <= 0) return;
    std::uint32_t p = f.field()->characteristic();
    FieldPolynomial fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decompose(pth_root(f), e * p, out);
        return;
    }
    FieldPolynomial c = gcd(f, fp);
    FieldPolynomial w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        FieldPolynomial y = gcd(w, c);
        FieldPolynomial z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * e);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(pth_root(c), e * p, out);
}

// Deterministic candidate sweep for equal-degree splitting: the n-th candidate
// polynomial over F_q with degree < bound, from the base-q digits of n.
FieldPolynomial candidate_poly(const FieldPtr& field, std::uint64_t n, int bound) {
    mpz_class q = field->order();
    std::vector<FieldElement> c;
    mpz_class m = n;
    while (m > 0 && int(c.size()) < bound) {
        mpz_class digit = m % q;
        c.push_back(field->element_at(digit.get_ui()));
        m /= q;
    }
    return FieldPolynomial(field, std::move(c));
}

void equal_degree_split(const FieldPolynomial& u, unsigned d,
                        std::vector<FieldPolynomial>& out) {
    if (u.degree() == int(d)) {
        out.push_back(u.monic());
        return;
    }
    const auto& field = u.field();
    std::uint32_t p = field->characteristic();
    mpz_class q = field->order();
    for (std::uint64_t n = 1;; ++n) {
        FieldPolynomial t = candidate_poly(field, n, u.degree());
        if (t.degree() < 1) continue;  // constants never split
        FieldPolynomial s;
        if (p == 2) {
            // trace map to F_2 over F_{q^d}
            unsigned total = unsigned(field->degree()) * d;
            FieldPolynomial acc = t % u;
            FieldPolynomial term = acc;
            for (unsigned i = 1; i < total; ++i) {
                term = (term * term) % u;
                acc = acc + term;
            }
            s = acc;
        } else {
            mpz_class qd;
            mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
            mpz_class e = (qd - 1) / 2;
            s = t.pow_mod(e, u) - FieldPolynomial::one(field);
        }
        FieldPolynomial g = gcd(s, u);
        if (g.degree() > 0 && g.degree() < u.degree()) {
            equal_degree_split(g, d, out);
            equal_degree_split(u / g, d, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<FieldPolynomial, unsigned>> factor(const FieldPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    std::vector<std::pair<FieldPolynomial, unsigned>> result;
    if (f.degree() == 0) return result;
    std::vector<std::pair<FieldPolynomial, unsigned>> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    mpz_class q = f.field()->order();
    for (auto& [g, mult] : sqf) {
        // distinct-degree on the squarefree part
        FieldPolynomial rest = g;
        FieldPolynomial h = FieldPolynomial::x(f.field()) % rest;
        for (unsigned d = 1; rest.degree() > 0 && int(2 * d) <= rest.degree(); ++d) {
            h = h.pow_mod(q, rest);
            FieldPolynomial diff = h - FieldPolynomial::x(f.field());
            FieldPolynomial gd = gcd(diff, rest);
            if (gd.degree() > 0) {
                std::vector<FieldPolynomial> irr;
                equal_degree_split(gd, d, irr);
                for (auto& fac : irr) result.emplace_back(fac, mult);
                rest = rest / gd;
                h = h % rest;
            }
        }
        if (rest.degree() > 0) result.emplace_back(rest.monic(), mult);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (FieldPolynomial::lex_less(a.first, b.first)) return true;
        if (FieldPolynomial::lex_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return result;
}

unsigned max_irreducible_degree(const FieldPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("max_irreducible_degree: zero polynomial");
    unsigned m = 0;
    for (const auto& [g, mult] : factor(f)) {
        (void)mult;
        m = std::max(m, unsigned(g.degree()));
    }
    return m;
}

bool is_irreducible(const FieldPolynomial& f) {
    if (f.degree() < 1) return false;
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].second == 1;
}

// ---------------------------------------------------------------------------
// Integer resultant (subresultant PRS) and rational gcd

namespace {

mpz_class content(const IntPolynomial& f) {
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
    mpz_class ct = content(f);
    if (ct == 0 || ct == 1) return f;
    std::vector<mpz_class> c = f.coeffs();
    for (auto& v : c) v /= ct;
    return IntPolynomial(std::move(c));
}

// lc(B)^(degA-degB+1) * A mod B, exact over Z.
IntPolynomial pseudo_rem(const IntPolynomial& A, const IntPolynomial& B) {
    IntPolynomial r = A;
    const mpz_class& lb = B.leading();
    int db = B.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int off = r.degree() - db;
        std::vector<mpz_class> c(std::size_t(r.degree() + 1));
        // r <- lb*r - lead(r)*X^off*B
        const mpz_class lr = r.leading();
        for (int i = 0; i <= r.degree(); ++i) c[std::size_t(i)] = r.coeff(std::size_t(i)) * lb;
        for (int j = 0; j <= db; ++j) c[std::size_t(off + j)] -= lr * B.coeff(std::size_t(j));
        r = IntPolynomial(std::move(c));
    }
    return r;  // a scalar multiple of A mod B; enough for primitive-PRS gcd
}

}  // namespace

mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    if (f.denominator() != 1 || g.denominator() != 1)
        throw std::invalid_argument("resultant: integer coefficients required");
    IntPolynomial A = f, B = g;
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), B.leading().get_mpz_t(), unsigned(A.degree()));
        return sign * r;
    }
    mpz_class ca = content(A), cb = content(B);
    A = primitive_part(A);
    B = primitive_part(B);
    mpz_class t, tb;
    mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), unsigned(B.degree()));
    mpz_pow_ui(tb.get_mpz_t(), cb.get_mpz_t(), unsigned(A.degree()));
    t *= tb;
    mpz_class gg = 1, hh = 1;
    for (;;) {
        int da = A.degree(), db = B.degree();
        unsigned delta = unsigned(da - db);
        if ((da & 1) && (db & 1)) sign = -sign;
        // R = lc(B)^(delta+1) A mod B, computed with exactly delta+1 scalings
        IntPolynomial R;
        {
            IntPolynomial r = A;
            unsigned scalings = 0;
            const mpz_class& lb = B.leading();
            while (!r.is_zero() && r.degree() >= db) {
                int off = r.degree() - db;
                const mpz_class lr = r.leading();
                std::vector<mpz_class> c(std::size_t(r.degree() + 1));
                for (int i = 0; i <= r.degree(); ++i) c[std::size_t(i)] = r.coeff(std::size_t(i)) * lb;
                for (int j = 0; j <= db; ++j) c[std::size_t(off + j)] -= lr * B.coeff(std::size_t(j));
                r = IntPolynomial(std::move(c));
                ++scalings;
            }
            mpz_class extra;
            if (scalings < delta + 1) {
                mpz_pow_ui(extra.get_mpz_t(), lb.get_mpz_t(), delta + 1 - scalings);
                r = r * extra;
            }
            R = std::move(r);
        }
        A = B;
        if (R.is_zero()) return 0;
        // B = R / (g * h^delta), exact
        {
            mpz_class hd;
            mpz_pow_ui(hd.get_mpz_t(), hh.get_mpz_t(), delta);
            mpz_class div = gg * hd;
            std::vector<mpz_class> c = R.coeffs();
            for (auto& v : c) {
                mpz_class qv, rv;
                mpz_tdiv_qr(qv.get_mpz_t(), rv.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
                if (rv != 0) throw std::logic_error("subresultant PRS: inexact division");
                v = qv;
            }
            B = IntPolynomial(std::move(c));
        }
        gg = A.leading();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), gg.get_mpz_t(), delta);
            mpz_pow_ui(den.get_mpz_t(), hh.get_mpz_t(), delta - 1);
            mpz_class qv, rv;
            mpz_tdiv_qr(qv.get_mpz_t(), rv.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rv != 0) throw std::logic_error("subresultant PRS: inexact h update");
            hh = qv;
        }
        if (B.degree() <= 0) {
            if (B.is_zero()) return 0;
            // final subresultant scalar: h' = lc(B)^degA / h^(degA - 1)
            unsigned dA = unsigned(A.degree());
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), B.leading().get_mpz_t(), dA);
            mpz_pow_ui(den.get_mpz_t(), hh.get_mpz_t(), dA >= 1 ? dA - 1 : 0);
            mpz_class qv, rv;
            mpz_tdiv_qr(qv.get_mpz_t(), rv.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rv != 0) throw std::logic_error("subresultant PRS: inexact final division");
            return sign * t * qv;
        }
    }
}

IntPolynomial int_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    IntPolynomial A = primitive_part(a), B = primitive_part(b);
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        IntPolynomial R = pseudo_rem(A, B);
        A = B;
        B = primitive_part(R);
        if (!B.is_zero() && A.degree() < B.degree()) std::swap(A, B);
    }
    if (!A.is_zero() && A.leading() < 0) A = -A;
    return A;
}

}  // namespace ordcert
