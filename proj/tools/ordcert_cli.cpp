// Command-line front end: supersingular sets, certification, norms, per-place
// checks, and exhaustive traces. Exit codes: 0 success, 1 usage, 2
// mathematical inconsistency, 3 resource cap.
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "ordcert/certifier.hpp"

namespace {

using namespace ordcert;

constexpr int kExitUsage = 1;
constexpr int kExitInconsistency = 2;
constexpr int kExitCap = 3;

std::string cache_file(const std::string& cache_dir, std::uint32_t p) {
    return (std::filesystem::path(cache_dir) / ("supersingular_p" + std::to_string(p) + ".txt"))
        .string();
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ORDCERT_CACHE_DIR")) return env;
    return {};
}

SupersingularSet cached_supersingular_set(std::uint32_t p, std::uint32_t cap,
                                          const std::string& cache_dir) {
    if (!cache_dir.empty()) {
        if (auto ss = load_supersingular_cache(cache_file(cache_dir, p), p)) return *ss;
    }
    SupersingularSet ss = supersingular_set(p, cap);
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        save_supersingular_cache(cache_file(cache_dir, p), ss);
    }
    return ss;
}

ParameterClass parse_ab(const std::string& ab) {
    long a = 0, b = 0;
    char comma = 0;
    std::istringstream is(ab);
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof())
        throw CLI::ValidationError("--ab", "expected two integers as a,b");
    return ParameterClass::canonical(a, b);
}

struct PrimeValidator : CLI::Validator {
    PrimeValidator() : CLI::Validator("PRIME") {
        func_ = [](const std::string& s) {
            std::uint64_t v = 0;
            try {
                v = std::stoull(s);
            } catch (...) {
                return std::string("not an integer: " + s);
            }
            return is_prime(v) ? std::string() : std::string("not a prime: " + s);
        };
    }
};

int run(int argc, char** argv) {
    CLI::App app{"ordinarity certification for curve families over cyclotomic towers"};
    app.require_subcommand(1);

    std::uint32_t p = 3;
    std::uint64_t r = 0, r_min = 7;
    std::string family = "frey", k_str = "1,2,3", ab_str, bound_str = "refined";
    std::string cache_flag, format = "json";
    std::uint64_t count_cap = kDefaultPointCountCap;
    std::uint32_t ss_cap = kDefaultSupersingularCap;
    PrimeValidator prime_check;

    auto* ss_cmd = app.add_subcommand("supersingular", "supersingular j-invariants mod p");
    ss_cmd->add_option("--p", p, "characteristic")->required()->check(prime_check);
    ss_cmd->add_option("--cap", ss_cap, "largest allowed p");
    ss_cmd->add_option("--cache", cache_flag, "cache directory");

    auto* cert_cmd = app.add_subcommand("certify", "emit an ordinarity certificate");
    cert_cmd->add_option("--p", p, "characteristic")->check(prime_check);
    cert_cmd->add_option("--family", family, "family name (frey)");
    cert_cmd->add_option("--k", k_str, "exponent triple k1,k2,k3");
    cert_cmd->add_option("--rmin", r_min, "smallest prime index checked")->check(prime_check);
    cert_cmd->add_option("--bound", bound_str, "degree bound kind")
        ->check(CLI::IsMember({"eq2", "refined"}));
    cert_cmd->add_option("--cache", cache_flag, "cache directory");
    cert_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    auto* norm_cmd = app.add_subcommand("norm", "norm of h(xi_r) from the r-th cyclotomic field");
    norm_cmd->add_option("--r", r, "prime index")->required()->check(prime_check);
    norm_cmd->add_option("--k", k_str, "exponent triple k1,k2,k3");
    norm_cmd->add_option("--ab", ab_str, "parameter pair a,b")->required();

    auto* check_cmd = app.add_subcommand("check", "per-place ordinarity statuses at one r");
    check_cmd->add_option("--r", r, "prime index")->required()->check(prime_check);
    check_cmd->add_option("--p", p, "characteristic")->check(prime_check);
    check_cmd->add_option("--family", family, "family name (frey)");
    check_cmd->add_option("--k", k_str, "exponent triple k1,k2,k3");
    check_cmd->add_option("--cache", cache_flag, "cache directory");

    auto* trace_cmd = app.add_subcommand("trace", "traces of Frobenius by exhaustive counting");
    trace_cmd->add_option("--r", r, "prime index")->required()->check(prime_check);
    trace_cmd->add_option("--p", p, "characteristic")->check(prime_check);
    trace_cmd->add_option("--family", family, "family name (frey)");
    trace_cmd->add_option("--k", k_str, "exponent triple k1,k2,k3");
    trace_cmd->add_option("--ab", ab_str, "parameter pair a,b")->required();
    trace_cmd->add_option("--cap", count_cap, "largest residue field counted exhaustively");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }
    std::string cache_dir = resolve_cache_dir(cache_flag);

    if (ss_cmd->parsed()) {
        SupersingularSet ss = cached_supersingular_set(p, ss_cap, cache_dir);
        std::cout << "count=" << ss.count << ", poly=" << ss.ss_poly.str() << "\n";
        return 0;
    }

    if (family != "frey") throw CLI::ValidationError("--family", "unknown family: " + family);
    Signature k = Signature::parse(k_str);
    if (cert_cmd->parsed() || check_cmd->parsed() || trace_cmd->parsed()) {
        if (p != 3)
            throw CLI::ValidationError(
                "--p", "no good-reduction guarantee wired for this family at p != 3");
    }

    if (cert_cmd->parsed()) {
        FamilyDescriptor desc = frey_descriptor(k);
        SupersingularSet ss = cached_supersingular_set(p, kDefaultSupersingularCap, cache_dir);
        CertifyOptions opts;
        opts.bound = bound_kind_from_string(bound_str);
        opts.r_min = r_min;
        opts.ss = &ss;
        Certificate cert = certify(desc, opts);
        if (format == "json") {
            std::cout << to_json(cert).dump(2) << "\n";
        } else {
            std::cout << "family=" << cert.family << " k=" << cert.k_label << " p=" << cert.p
                      << "\n"
                      << "bound=" << bound_kind_to_string(cert.bound_kind) << " d=" << cert.d
                      << " r_min=" << cert.r_min << "\n";
            for (const auto& pr : cert.exceptional) {
                std::cout << "r=" << pr.r << ":";
                for (std::size_t i = 0; i < pr.places.size(); ++i) {
                    std::cout << " place" << i << "(f=" << pr.places[i].degree << ")[";
                    bool first = true;
                    for (const auto& [label, st] : pr.places[i].class_statuses) {
                        if (!first) std::cout << " ";
                        std::cout << label << "=" << status_to_string(st);
                        first = false;
                    }
                    std::cout << "]";
                }
                std::cout << "\n";
            }
            std::cout << "threshold=" << cert.threshold << "\n";
        }
        return 0;
    }

    if (norm_cmd->parsed()) {
        ParameterClass cls = parse_ab(ab_str);
        NormResult n = norm(r, h_polynomial(k, cls));
        std::cout << "|norm|=" << abs(n.cyclotomic_norm) << ", sign(resultant)=" << n.sign
                  << "\n";
        return 0;
    }

    SupersingularSet ss = cached_supersingular_set(p, kDefaultSupersingularCap, cache_dir);

    if (check_cmd->parsed()) {
        FamilyDescriptor desc = frey_descriptor(k);
        PrimeReport report = check_at_prime(desc, r, ss);
        for (std::size_t i = 0; i < report.places.size(); ++i) {
            std::cout << "place " << i << " (degree " << report.places[i].degree << "):";
            for (const auto& [label, st] : report.places[i].class_statuses)
                std::cout << " " << label << "=" << status_to_string(st);
            std::cout << "\n";
        }
        return 0;
    }

    // trace
    ParameterClass cls = parse_ab(ab_str);
    for (const ResiduePlace& place : residue_places(r, p)) {
        WeierstrassCurve curve = frey_curve_at_place(k, cls, place);
        std::int64_t a = trace_of_frobenius(curve, count_cap);
        std::cout << "place " << place.index << " (degree " << place.degree() << "): a_p=" << a
                  << (a % p == 0 ? " (supersingular)" : " (ordinary)") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ordcert::InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const ordcert::CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistency;
    }
}
