#include "prym/report.hpp"

#include "prym/error.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace prym {

namespace {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

Json pattern_json(const DegreePattern& p) {
    return p.parts;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json integers(const std::vector<Integer>& values) {
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

// Text of a scalar cell in a Markdown table.
std::string cell(const Json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_object() && v.size() == 1 && v.contains("approx")) {
        const Json& a = v["approx"];
        if (a.is_string()) {
            return "≈" + a.get<std::string>();
        }
        if (a.is_object()) {
            return "≈" + a.value("re", "") + (a.value("im", "").rfind('-', 0) == 0 ? " " : " +") +
                   a.value("im", "") + "i";
        }
    }
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
        std::string out;
        for (const auto& x : v) {
            out += (out.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
        }
        return "[" + out + "]";
    }
    return v.dump();
}

bool is_scalar(const Json& v) {
    return v.is_primitive() || (v.is_object() && v.size() == 1 && v.contains("approx")) ||
           (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); }));
}

bool is_table(const Json& v) {
    return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& row) {
               return row.is_object() &&
                      std::all_of(row.begin(), row.end(), [](const Json& x) { return is_scalar(x); });
           });
}

void render_object(std::ostringstream& out, const Json& obj, const std::string& title, int level);

void render_table(std::ostringstream& out, const Json& rows) {
    std::vector<std::string> columns;
    std::set<std::string> seen;
    for (const auto& row : rows) {
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (seen.insert(it.key()).second) {
                columns.push_back(it.key());
            }
        }
    }
    out << "|";
    for (const auto& c : columns) {
        out << " " << c << " |";
    }
    out << "\n|";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << "---|";
    }
    out << "\n";
    for (const auto& row : rows) {
        out << "|";
        for (const auto& c : columns) {
            out << " " << (row.contains(c) ? cell(row[c]) : "") << " |";
        }
        out << "\n";
    }
    out << "\n";
}

void render_value(std::ostringstream& out, const Json& value, const std::string& key, int level) {
    if (is_table(value)) {
        out << std::string(static_cast<std::size_t>(level), '#') << " " << key << "\n\n";
        render_table(out, value);
    } else if (value.is_object()) {
        render_object(out, value, key, level);
    } else if (value.is_array()) {
        out << std::string(static_cast<std::size_t>(level), '#') << " " << key << "\n\n";
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (is_scalar(value[i])) {
                out << "- " << cell(value[i]) << "\n";
            } else {
                render_value(out, value[i], key + " " + std::to_string(i + 1), level + 1);
            }
        }
        out << "\n";
    }
}

void render_object(std::ostringstream& out, const Json& obj, const std::string& title, int level) {
    out << std::string(static_cast<std::size_t>(level), '#') << " " << title << "\n\n";
    bool any_scalar = false;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (is_scalar(it.value())) {
            if (!any_scalar) {
                out << "| key | value |\n|---|---|\n";
                any_scalar = true;
            }
            out << "| " << it.key() << " | " << cell(it.value()) << " |\n";
        }
    }
    if (any_scalar) {
        out << "\n";
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!is_scalar(it.value())) {
            render_value(out, it.value(), it.key(), std::min(level + 1, 6));
        }
    }
}

} // namespace

Json approx(double value) {
    return Json{{"approx", format_double(value)}};
}

Json approx(std::complex<double> value) {
    return Json{{"approx", Json{{"re", format_double(value.real())}, {"im", format_double(value.imag())}}}};
}

Json to_json(const RatPoly& f) {
    return f.to_string();
}

Json to_json(const IntPoly& f) {
    return to_string(f);
}

Json to_json(const GaloisCertificate& cert) {
    Json patterns = Json::array();
    for (const auto& [pattern, prime] : cert.patterns) {
        patterns.push_back({{"pattern", pattern_json(pattern)}, {"first_prime", prime}});
    }
    return {
        {"polynomial", to_json(cert.polynomial)},
        {"degree", cert.polynomial.degree()},
        {"verdict", to_string(cert.verdict)},
        {"primes_inspected", cert.primes_inspected.size()},
        {"largest_prime_inspected", cert.primes_inspected.empty() ? 0 : cert.primes_inspected.back()},
        {"bad_primes", cert.bad_primes},
        {"patterns", patterns},
        {"evidence",
         {{"irreducibility_prime", optional_json(cert.evidence.irreducibility_prime)},
          {"long_cycle_prime", optional_json(cert.evidence.long_cycle_prime)},
          {"transposition_prime", optional_json(cert.evidence.transposition_prime)}}},
    };
}

Json to_json(const PrymPartition& part) {
    return {
        {"r1", part.r1},
        {"r2", part.r2},
        {"n1", part.n1},
        {"n2", part.n2},
        {"g1", part.g1},
        {"g2", part.g2},
        {"endo", to_string(part.endo)},
        {"hodge", to_string(part.hodge)},
        {"property_D", part.property_d},
        {"hypothesis_met", part.hypothesis_met},
    };
}

Json to_json(const LemmaKeyReport& r) {
    return {
        {"n", r.n},
        {"T", r.t},
        {"S", r.s},
        {"young_order", r.young_order},
        {"expected_young_order", r.expected_young_order},
        {"restriction_T_order", r.restriction_t_order},
        {"restriction_S_order", r.restriction_s_order},
        {"stabilizer_T_order", r.stabilizer_t_order},
        {"stabilizer_S_order", r.stabilizer_s_order},
        {"joint_stabilizer_order", r.joint_stabilizer_order},
        {"i_galois_group_is_young", r.galois_group_is_young},
        {"ii_coefficients_in_fixed_field", r.coefficients_in_fixed_field},
        {"ii_note", "holds by invariance: the Young subgroup preserves T and S setwise"},
        {"iii_restrictions_are_full", r.restrictions_are_full},
        {"iv_linearly_disjoint", r.linearly_disjoint},
        {"v_compositum_is_splitting_field", r.compositum_is_splitting_field},
        {"all_hold", r.all_hold()},
    };
}

Json to_json(const FrobeniusData& d) {
    return {
        {"p", d.p},
        {"genus", d.genus},
        {"counts", integers(d.counts)},
        {"power_sums", integers(d.power_sums)},
        {"charpoly", to_json(d.charpoly)},
        {"charpoly_coefficients", integers(d.charpoly)},
        {"jacobian_order", to_string(evaluate(d.charpoly, 1))},
    };
}

Json to_json(const HomZeroCertificate& c) {
    Json attempts = Json::array();
    for (const auto& a : c.attempts) {
        attempts.push_back({{"p", a.p}, {"gcd_degree", a.gcd_degree}});
    }
    return {
        {"f1", to_json(c.f1)},
        {"f2", to_json(c.f2)},
        {"r", c.r},
        {"grade", to_string(c.grade)},
        {"p", c.p},
        {"power_charpoly_1", c.charpoly1.empty() ? Json(nullptr) : to_json(c.charpoly1)},
        {"power_charpoly_2", c.charpoly2.empty() ? Json(nullptr) : to_json(c.charpoly2)},
        {"gcd", c.attempts.empty() ? Json(nullptr) : to_json(c.gcd)},
        {"attempts", attempts},
        {"statement", c.statement},
    };
}

Json to_json(const JRecord& record, const CmScreen& screen) {
    Json out{
        {"subset", record.subset},
        {"j", approx(record.j)},
        {"cm", screen.matches() ? "MatchesRationalCM(" + std::to_string(*screen.discriminant) + ")" : "NoRationalCM"},
    };
    if (record.marked) {
        out["marked_root"] = *record.marked;
    }
    if (record.exact_j) {
        out["exact_j"] = to_string(*record.exact_j);
    }
    return out;
}

Json to_json(const RationalityEvidence& e) {
    Json values = Json::array();
    for (const auto& v : e.values) {
        values.push_back({
            {"name", v.name},
            {"value", approx(v.approx)},
            {"reference", v.reference ? Json(to_string(*v.reference)) : Json(nullptr)},
            {"residual", v.reference ? approx(v.residual) : Json(nullptr)},
        });
    }
    return {
        {"tol", approx(e.tol)},
        {"working_precision_bits", e.working_precision_bits},
        {"records", e.records},
        {"values", values},
        {"partial", e.partial},
        {"pass", e.pass},
        {"threshold", approx(kRationalityThreshold)},
        {"note", e.note},
    };
}

Json to_json(const ShrinkageReport& r) {
    return {
        {"coarse", to_json(r.coarse)},
        {"fine", to_json(r.fine)},
        {"shrink_factor", approx(r.factor)},
    };
}

Json to_json(const CensusReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json j = to_json(row.partition);
        j["reconstruction_error"] = approx(row.reconstruction_error);
        j["failed"] = row.failed;
        if (row.failed) {
            j["error"] = row.error;
        }
        rows.push_back(std::move(j));
    }
    Json roots = Json::array();
    for (const auto& z : r.roots) {
        roots.push_back(approx(z));
    }
    Json curve{
        {"polynomial", to_json(r.spec.f)},
        {"shape", to_string(r.spec.shape)},
        {"n", r.spec.n},
        {"g", r.spec.g},
        {"prym_dimension", r.spec.g - 1},
        {"a", r.spec.a ? Json(to_string(*r.spec.a)) : Json(nullptr)},
        {"certified_factor", to_json(r.spec.certified_factor())},
    };
    Json verification = Json::object();
    if (!r.lemma_key.empty()) {
        Json lk = Json::array();
        for (const auto& l : r.lemma_key) {
            lk.push_back(to_json(l));
        }
        verification["lemma_key"] = lk;
    }
    if (!r.frobenius.empty()) {
        Json fr = Json::array();
        for (const auto& d : r.frobenius) {
            fr.push_back(to_json(d));
        }
        verification["frobenius"] = fr;
    }
    if (r.j_census) {
        Json recs = Json::array();
        std::size_t cm = 0;
        for (std::size_t i = 0; i < r.j_census->records.size(); ++i) {
            recs.push_back(to_json(r.j_census->records[i], r.j_census->screens[i]));
            cm += r.j_census->screens[i].matches();
        }
        verification["j_census"] = {
            {"records", recs},
            {"record_count", recs.size()},
            {"cm_matches", cm},
            {"rationality", to_json(r.j_census->rationality)},
        };
    }
    return {
        {"curve", curve},
        {"certificate", to_json(r.certificate)},
        {"hypothesis", to_string(r.hypothesis)},
        {"roots", roots},
        {"summary",
         {{"total", r.summary.total},
          {"endZ", r.summary.end_z},
          {"endZZ", r.summary.end_zz},
          {"unclassified", r.summary.unclassified},
          {"property_D", r.summary.property_d},
          {"failed", r.summary.failed}}},
        {"rows", rows},
        {"verification", verification},
        {"attachment_errors", r.attachment_errors},
        {"notes", r.notes},
    };
}

Json envelope(const std::string& command, Json result) {
    return {{"schema", kReportSchema}, {"command", command}, {"result", std::move(result)}};
}

Json error_json(const std::exception& e) {
    Json err{{"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        err["kind"] = std::string(to_string(pe->kind()));
        err["offset"] = pe->offset();
    } else if (const auto* ce = dynamic_cast<const ConvergenceError*>(&e)) {
        err["kind"] = std::string(to_string(ce->kind()));
        err["best_residual"] = approx(ce->best_residual());
    } else if (const auto* pe2 = dynamic_cast<const Error*>(&e)) {
        err["kind"] = std::string(to_string(pe2->kind()));
    } else {
        err["kind"] = "Usage";
    }
    return {{"schema", kReportSchema}, {"error", err}};
}

std::string dump(const Json& doc) {
    return doc.dump(2) + "\n";
}

std::string render_markdown(const Json& doc) {
    std::ostringstream out;
    const std::string title = doc.contains("command") ? doc["command"].get<std::string>() : "report";
    if (doc.contains("result") && doc["result"].is_object()) {
        out << "# " << title << " (schema " << doc.value("schema", kReportSchema) << ")\n\n";
        const Json& result = doc["result"];
        for (auto it = result.begin(); it != result.end(); ++it) {
            if (is_scalar(it.value())) {
                out << "- **" << it.key() << "**: " << cell(it.value()) << "\n";
            }
        }
        out << "\n";
        for (auto it = result.begin(); it != result.end(); ++it) {
            if (!is_scalar(it.value())) {
                render_value(out, it.value(), it.key(), 2);
            }
        }
    } else {
        render_value(out, doc, title, 1);
    }
    return out.str();
}

} // namespace prym
