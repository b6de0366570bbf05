#include "prym/cli.hpp"

#include "prym/config.hpp"
#include "prym/error.hpp"
#include "prym/poly_parser.hpp"
#include "prym/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace prym {

namespace {

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw Error(ErrorKind::InvalidArgument, "expected a comma-separated index list, got '" + text + "'");
        }
        out.push_back(v);
    }
    return out;
}

void emit(std::ostream& out, const RunConfig& config, const std::string& command, Json result) {
    Json doc = envelope(command, std::move(result));
    out << (config.format == OutputFormat::Json ? dump(doc) : render_markdown(doc));
}

int cmd_certify(const RunConfig& config, const std::string& text, std::ostream& out) {
    GaloisCertificate cert = certify_symmetric(parse_poly(text), config.primes);
    emit(out, config, "certify", to_json(cert));
    return cert.verdict == GaloisVerdict::CertifiedSymmetric ? kExitSuccess : kExitInconclusive;
}

int cmd_census(const RunConfig& config, const std::string& text, std::ostream& out) {
    CurveSpec spec = CurveSpec::from_polynomial(parse_poly(text));
    CensusReport report = build_census(spec, config.census_options());
    emit(out, config, "census", to_json(report));
    const bool ok = report.hypothesis == Hypothesis::Certified && report.fully_classified() &&
                    report.attachment_errors.empty();
    return ok ? kExitSuccess : kExitInconclusive;
}

int cmd_verify_hom(const RunConfig& config, const std::string& a, const std::string& b, std::ostream& out) {
    HomZeroCertificate cert = hom_zero_certificate(parse_poly(a), parse_poly(b), config.primes, config.twist);
    emit(out, config, "verify-hom", to_json(cert));
    return cert.grade == HomGrade::ProvedOverFpr ? kExitSuccess : kExitInconclusive;
}

int cmd_j_census(const RunConfig& config, const std::string& text, std::ostream& out) {
    CurveSpec spec = CurveSpec::from_polynomial(parse_poly(text));
    CmTable table = config.census_options().cm_table;
    std::vector<JRecord> records = j_census(spec, config.tol);
    Json recs = Json::array();
    for (const auto& r : records) {
        recs.push_back(to_json(r, cm_screen(r, table)));
    }
    ShrinkageReport shrink = rationality_shrinkage(spec, config.tol, config.tol * 1e-4);
    Json verification = Json::array();
    for (const auto& v : table.verify()) {
        verification.push_back({{"discriminant", v.discriminant}, {"primes", v.primes}, {"ok", v.ok}});
    }
    emit(out, config, "j-census",
         {{"polynomial", to_json(spec.f)},
          {"shape", to_string(spec.shape)},
          {"record_count", records.size()},
          {"records", recs},
          {"rationality", to_json(shrink)},
          {"cm_table_verification", verification}});
    return shrink.coarse.pass && shrink.fine.pass ? kExitSuccess : kExitInconclusive;
}

int cmd_lemma_key(const RunConfig& config, std::size_t n, const std::string& t, const std::string& s,
                  std::ostream& out) {
    LemmaKeyReport report = verify_lemma_key(n, parse_index_list(t), parse_index_list(s));
    emit(out, config, "lemma-key", to_json(report));
    return report.all_hold() ? kExitSuccess : kExitInconclusive;
}

int cmd_frobenius(const RunConfig& config, const std::string& text, std::uint64_t p, std::ostream& out) {
    FrobeniusData data = frobenius_charpoly(parse_poly(text), p);
    emit(out, config, "frobenius", to_json(data));
    return kExitSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prym decompositions of hyperelliptic curves y^2 = f(x)", "prymcensus"};
    app.require_subcommand(1);
    app.fallthrough();

    std::size_t primes = 0;
    unsigned twist = 0;
    double tol = 0.0;
    std::string cm_table, verify, format, config_path;
    bool assume_symmetric = false;
    auto* o_primes = app.add_option("--primes", primes, "Prime budget for certification and searches (default 500)");
    auto* o_twist = app.add_option("--twist", twist, "Twist exponent r for Hom = 0 certificates (default 24)");
    auto* o_tol = app.add_option("--tol", tol, "Root tolerance (default 1e-12)");
    auto* o_cm = app.add_option("--cm-table", cm_table, "CM table file: 'discriminant j' per line");
    auto* o_verify = app.add_option("--verify", verify, "Comma list of lemma-key,frobenius,j, or none");
    auto* o_format = app.add_option("--format", format, "Output format: json or md")->check(CLI::IsMember({"json", "md"}));
    app.add_option("--config", config_path, "Flat key = value configuration file; flags override it");
    auto* o_assume = app.add_flag("--assume-symmetric", assume_symmetric,
                                  "Treat Gal = S_n as an unverified hypothesis when certification is inconclusive");

    std::string poly_a, poly_b;
    std::size_t lemma_n = 0;
    std::string lemma_t, lemma_s;
    std::uint64_t prime = 0;

    auto* certify = app.add_subcommand("certify", "Certify Gal(f) = S_n from factorization patterns");
    certify->add_option("f", poly_a, "Polynomial")->required();
    auto* census = app.add_subcommand("census", "Enumerate and classify the Prym decompositions");
    census->add_option("f", poly_a, "Polynomial of even degree")->required();
    auto* hom = app.add_subcommand("verify-hom", "Search for a Hom = 0 certificate via Frobenius");
    hom->add_option("f1", poly_a, "First polynomial")->required();
    hom->add_option("f2", poly_b, "Second polynomial")->required();
    auto* jc = app.add_subcommand("j-census", "j-invariants of the elliptic factors");
    jc->add_option("f", poly_a, "Polynomial of even degree")->required();
    auto* lemma = app.add_subcommand("lemma-key", "Check the two-subset Galois lemma on Perm(T) x Perm(S)");
    lemma->add_option("n", lemma_n, "Degree")->required();
    lemma->add_option("T", lemma_t, "Comma-separated indices")->required();
    lemma->add_option("S", lemma_s, "Comma-separated indices")->required();
    auto* frob = app.add_subcommand("frobenius", "Frobenius characteristic polynomial at p");
    frob->add_option("f", poly_a, "Polynomial")->required();
    frob->add_option("p", prime, "Odd prime of good reduction")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << dump(error_json(e));
        return kExitError;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) {
            apply_config_file(config, config_path);
        }
        if (o_primes->count()) {
            config.primes = primes;
        }
        if (o_twist->count()) {
            config.twist = twist;
        }
        if (o_tol->count()) {
            config.tol = tol;
        }
        if (o_cm->count()) {
            config.cm_table = cm_table;
        }
        if (o_verify->count()) {
            config.verify = parse_verify_list(verify);
        }
        if (o_format->count()) {
            apply_setting(config, "format", format);
        }
        if (o_assume->count()) {
            config.assume_symmetric = assume_symmetric;
        }
        config.validate();

        if (*certify) {
            return cmd_certify(config, poly_a, out);
        }
        if (*census) {
            return cmd_census(config, poly_a, out);
        }
        if (*hom) {
            return cmd_verify_hom(config, poly_a, poly_b, out);
        }
        if (*jc) {
            return cmd_j_census(config, poly_a, out);
        }
        if (*lemma) {
            return cmd_lemma_key(config, lemma_n, lemma_t, lemma_s, out);
        }
        if (*frob) {
            return cmd_frobenius(config, poly_a, prime, out);
        }
    } catch (const std::exception& e) {
        err << dump(error_json(e));
        return kExitError;
    }
    return kExitError;
}

} // namespace prym
