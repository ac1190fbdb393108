#include "ordcert/certifier.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <map>

namespace ordcert {

std::string bound_kind_to_string(BoundKind k) {
    return k == BoundKind::eq2 ? "eq2" : "refined";
}

BoundKind bound_kind_from_string(const std::string& s) {
    if (s == "eq2") return BoundKind::eq2;
    if (s == "refined") return BoundKind::refined;
    throw std::invalid_argument("unknown bound kind: " + s);
}

std::string status_to_string(Status s) {
    switch (s) {
        case Status::ordinary: return "ordinary";
        case Status::fails: return "fails";
        case Status::indeterminate: return "indeterminate";
        case Status::inconsistency: return "inconsistency";
    }
    throw std::logic_error("unreachable");
}

Status status_from_string(const std::string& s) {
    if (s == "ordinary") return Status::ordinary;
    if (s == "fails") return Status::fails;
    if (s == "indeterminate") return Status::indeterminate;
    if (s == "inconsistency") return Status::inconsistency;
    throw std::invalid_argument("unknown status: " + s);
}

FamilyDescriptor frey_descriptor(const Signature& k) {
    const std::uint32_t p = 3;
    FamilyDescriptor desc;
    desc.p = p;
    desc.family = "frey";
    desc.k_label = k.label();
    desc.tower = TowerKind::real_cyclotomic;
    desc.good_reduction_guaranteed = true;
    std::map<std::string, ParameterClass> by_label;
    for (const ParameterClass& cls : canonical_classes()) {
        auto [c4, delta] = c4_delta_polynomials(k, cls);
        ClassSpec spec;
        spec.label = cls.label();
        spec.C = reduce_mod_p(c4, p);
        spec.D = reduce_mod_p(delta, p);
        spec.h = reduce_mod_p(h_polynomial(k, cls), p);
        desc.classes.push_back(std::move(spec));
        by_label.emplace(cls.label(), cls);
    }
    desc.curve_at_place = [k, by_label](const std::string& label, const ResiduePlace& place) {
        auto it = by_label.find(label);
        if (it == by_label.end())
            throw std::invalid_argument("unknown parameter class: " + label);
        return frey_curve_at_place(k, it->second, place);
    };
    return desc;
}

namespace {

void validate(const FamilyDescriptor& desc) {
    if (!is_prime(desc.p)) throw std::invalid_argument("descriptor: p must be prime");
    if (desc.classes.empty()) throw std::invalid_argument("descriptor: no parameter classes");
    for (const auto& cls : desc.classes) {
        if (cls.C.is_zero() || cls.D.is_zero())
            throw std::invalid_argument("descriptor: zero polynomial in class " + cls.label);
        if (cls.C.field()->characteristic() != desc.p ||
            cls.D.field()->characteristic() != desc.p)
            throw std::invalid_argument("descriptor: class polynomials not over F_p");
    }
}

/// Constants of a prime-field polynomial lifted into an extension of F_p.
FieldPolynomial embed_constants(const FieldPolynomial& f, const FieldPtr& ext) {
    std::vector<FieldElement> c;
    c.reserve(f.coeffs().size());
    for (const FieldElement& e : f.coeffs()) c.push_back(ext->from_int(e.coeffs()[0]));
    return FieldPolynomial(ext, std::move(c));
}

/// The supersingular values b as (field, element) pairs: roots of the linear
/// factors stay in F_p, each quadratic factor contributes its two conjugate
/// roots via one representative in F_p[X]/(factor).
struct SupersingularRoot {
    FieldPtr field;
    FieldElement b;
    bool rational;  // b in F_p
};

std::vector<SupersingularRoot> supersingular_roots(const SupersingularSet& ss) {
    std::vector<SupersingularRoot> out;
    for (const auto& [fac, mult] : factor(ss.ss_poly)) {
        (void)mult;
        if (fac.degree() == 1) {
            FieldPtr F = ss.ss_poly.field();
            out.push_back({F, -fac.coeff(0), true});
        } else if (fac.degree() == 2) {
            std::vector<std::uint32_t> mod;
            for (int i = 0; i <= fac.degree(); ++i) mod.push_back(fac.coeff(std::size_t(i)).coeffs()[0]);
            FieldPtr F2 = ExtensionField::with_modulus(ss.p, std::move(mod));
            out.push_back({F2, F2->generator_x(), false});
        } else {
            throw std::logic_error("supersingular polynomial has a factor of degree > 2");
        }
    }
    return out;
}

}  // namespace

DegreeBound degree_bound(const FamilyDescriptor& desc, const SupersingularSet& ss,
                         BoundKind kind) {
    validate(desc);
    if (ss.p != desc.p) throw std::invalid_argument("degree_bound: supersingular set p mismatch");

    if (kind == BoundKind::refined) {
        bool all_have_h = std::all_of(desc.classes.begin(), desc.classes.end(),
                                      [](const ClassSpec& c) { return c.h.has_value(); });
        if (all_have_h) {
            unsigned d = 0;
            for (const auto& cls : desc.classes) {
                if (cls.h->is_zero())
                    throw std::invalid_argument("degree_bound: zero shortcut polynomial");
                d = std::max(d, 2 * max_irreducible_degree(*cls.h));
            }
            return {d, kind, true};
        }
    }

    auto roots = supersingular_roots(ss);
    unsigned d = 0;
    for (const auto& cls : desc.classes) {
        FieldPolynomial C3 = cls.C * cls.C * cls.C;
        for (const auto& root : roots) {
            FieldPolynomial g = root.rational
                                    ? C3 - cls.D * root.b
                                    : embed_constants(C3, root.field) -
                                          embed_constants(cls.D, root.field) * root.b;
            if (g.is_zero())
                throw std::invalid_argument("degree_bound: C^3 - b D vanishes identically");
            // Degrees over F_{p^2} count double when measured over F_p.
            unsigned scale = root.rational ? 1 : 2;
            unsigned contrib = kind == BoundKind::eq2 ? unsigned(g.degree()) * scale
                                                      : max_irreducible_degree(g) * scale;
            d = std::max(d, contrib);
        }
    }
    return {d, kind, false};
}

namespace {

Status status_at(const FamilyDescriptor& desc, const ClassSpec& cls, const ResiduePlace& place,
                 const SupersingularSet& ss) {
    FieldElement Dv = cls.D.evaluate(place.xi_image);
    if (Dv.is_zero())
        return desc.good_reduction_guaranteed ? Status::inconsistency : Status::indeterminate;
    FieldElement Cv = cls.C.evaluate(place.xi_image);
    FieldElement C3 = Cv * Cv * Cv;

    // Route 1: j = C^3 / D against the supersingular polynomial.
    bool ordinary_j = !is_supersingular_j(C3 * Dv.inverse(), ss);

    // Route 2, division-free: for each irreducible factor q of the
    // supersingular polynomial, prod over its roots b of (C^3 - b D) equals
    // the homogenization sum_i q_i (C^3)^i D^(deg q - i); all must be nonzero.
    const FieldPtr& F = place.field;
    bool ordinary_sub = true;
    for (const auto& [fac, mult] : factor(ss.ss_poly)) {
        (void)mult;
        int n = fac.degree();
        FieldElement acc = F->zero();
        for (int i = 0; i <= n; ++i) {
            FieldElement term = F->from_int(fac.coeff(std::size_t(i)).coeffs()[0]);
            for (int t = 0; t < i; ++t) term = term * C3;
            for (int t = 0; t < n - i; ++t) term = term * Dv;
            acc = acc + term;
        }
        if (acc.is_zero()) ordinary_sub = false;
    }
    if (ordinary_j != ordinary_sub)
        throw std::logic_error("ordinarity routes disagree at r=" + std::to_string(place.r));
    return ordinary_j ? Status::ordinary : Status::fails;
}

}  // namespace

PrimeReport check_at_prime(const FamilyDescriptor& desc, std::uint64_t r,
                           const SupersingularSet& ss) {
    validate(desc);
    if (ss.p != desc.p)
        throw std::invalid_argument("check_at_prime: supersingular set p mismatch");
    if (r == desc.p) throw std::invalid_argument("check_at_prime: r = p ramifies");
    auto places = desc.tower == TowerKind::real_cyclotomic
                      ? residue_places(r, desc.p)
                      : residue_places_cyclotomic(r, desc.p);
    PrimeReport report;
    report.r = r;
    for (const ResiduePlace& place : places) {
        PlaceReport pr;
        pr.degree = place.degree();
        for (const ClassSpec& cls : desc.classes)
            pr.class_statuses.emplace_back(cls.label, status_at(desc, cls, place, ss));
        report.places.push_back(std::move(pr));
    }
    return report;
}

namespace {

std::string now_rfc3339() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Certificate certify(const FamilyDescriptor& desc, const CertifyOptions& opts) {
    validate(desc);
    SupersingularSet local{0, {}, 0};
    const SupersingularSet* ss = opts.ss;
    if (!ss) {
        local = supersingular_set(desc.p);
        ss = &local;
    } else if (ss->p != desc.p) {
        throw std::invalid_argument("certify: supersingular set p mismatch");
    }

    DegreeBound bound = degree_bound(desc, *ss, opts.bound);
    // The h shortcut bounds degrees over F_p of the full r-th cyclotomic
    // tower, so it is compared against ord_r(p); the direct C, D bound lives
    // in the tower itself and is compared against the place degree.
    std::vector<std::uint64_t> exceptional =
        bound.via_h ? exceptional_primes(desc.p, bound.d, opts.r_min)
                    : exceptional_primes_by_place_degree(desc.p, bound.d, opts.r_min);

    Certificate cert;
    cert.p = desc.p;
    cert.family = desc.family;
    cert.k_label = desc.k_label;
    cert.bound_kind = bound.kind;
    cert.d = bound.d;
    cert.r_min = opts.r_min;
    cert.threshold = opts.r_min - 1;
    for (std::uint64_t r : exceptional) {
        PrimeReport report = check_at_prime(desc, r, *ss);
        for (const auto& place : report.places)
            for (const auto& [label, status] : place.class_statuses) {
                if (status == Status::inconsistency)
                    throw InconsistencyError(
                        "good-reduction guarantee contradicted at r=" + std::to_string(r) +
                        ", class " + label);
                if (status != Status::ordinary) cert.threshold = std::max(cert.threshold, r);
            }
        cert.exceptional.push_back(std::move(report));
    }
    cert.version = kCertificateVersion;
    cert.generated_at = now_rfc3339();
    return cert;
}

bool cross_validate(const FamilyDescriptor& desc, std::uint64_t r, const SupersingularSet& ss,
                    std::uint64_t cap) {
    if (!desc.curve_at_place)
        throw std::invalid_argument("cross_validate: family provides no curve models");
    PrimeReport report = check_at_prime(desc, r, ss);
    auto places = desc.tower == TowerKind::real_cyclotomic
                      ? residue_places(r, desc.p)
                      : residue_places_cyclotomic(r, desc.p);
    for (std::size_t i = 0; i < places.size(); ++i) {
        for (const auto& [label, status] : report.places[i].class_statuses) {
            if (status == Status::indeterminate || status == Status::inconsistency) return false;
            WeierstrassCurve curve = desc.curve_at_place(label, places[i]);
            if (is_ordinary(curve, cap) != (status == Status::ordinary)) return false;
        }
    }
    return true;
}

nlohmann::ordered_json to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["p"] = cert.p;
    j["family"] = cert.family;
    j["k"] = cert.k_label;
    j["bound_kind"] = bound_kind_to_string(cert.bound_kind);
    j["d"] = cert.d;
    j["r_min"] = cert.r_min;
    nlohmann::ordered_json exc = nlohmann::ordered_json::array();
    for (const PrimeReport& pr : cert.exceptional) {
        nlohmann::ordered_json places = nlohmann::ordered_json::array();
        for (const PlaceReport& place : pr.places) {
            nlohmann::ordered_json statuses;
            for (const auto& [label, status] : place.class_statuses)
                statuses[label] = status_to_string(status);
            places.push_back({{"degree", place.degree}, {"class_statuses", statuses}});
        }
        exc.push_back({{"r", pr.r}, {"places", places}});
    }
    j["exceptional"] = std::move(exc);
    j["threshold"] = cert.threshold;
    j["version"] = cert.version;
    j["generated_at"] = cert.generated_at;
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate cert;
    cert.p = j.at("p").get<std::uint32_t>();
    cert.family = j.at("family").get<std::string>();
    cert.k_label = j.at("k").get<std::string>();
    cert.bound_kind = bound_kind_from_string(j.at("bound_kind").get<std::string>());
    cert.d = j.at("d").get<unsigned>();
    cert.r_min = j.at("r_min").get<std::uint64_t>();
    for (const auto& pr : j.at("exceptional")) {
        PrimeReport report;
        report.r = pr.at("r").get<std::uint64_t>();
        for (const auto& place : pr.at("places")) {
            PlaceReport p;
            p.degree = place.at("degree").get<unsigned>();
            for (const auto& [label, status] : place.at("class_statuses").items())
                p.class_statuses.emplace_back(label, status_from_string(status.get<std::string>()));
            report.places.push_back(std::move(p));
        }
        cert.exceptional.push_back(std::move(report));
    }
    cert.threshold = j.at("threshold").get<std::uint64_t>();
    cert.version = j.at("version").get<std::string>();
    cert.generated_at = j.value("generated_at", std::string());
    return cert;
}

}  // namespace ordcert
