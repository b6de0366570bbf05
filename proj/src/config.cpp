#include "prym/config.hpp"

#include "prym/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace prym {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

unsigned long parse_positive(std::string_view key, std::string_view value) {
    unsigned long out = 0;
    auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || end != value.data() + value.size() || out == 0) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(key) + " must be a positive integer, got '" + std::string(value) + "'");
    }
    return out;
}

double parse_tolerance(std::string_view value) {
    try {
        std::size_t used = 0;
        std::string text(value);
        double tol = std::stod(text, &used);
        if (used == text.size()) {
            return tol;
        }
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, "tol must be a number, got '" + std::string(value) + "'");
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw Error(ErrorKind::InvalidArgument, std::string(key) + " must be true or false");
}

} // namespace

void RunConfig::validate() const {
    if (primes == 0) {
        throw Error(ErrorKind::InvalidArgument, "primes must be positive");
    }
    if (twist == 0) {
        throw Error(ErrorKind::InvalidArgument, "twist must be positive");
    }
    if (!(tol > 0.0 && tol < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "tol must lie in (0, 1)");
    }
}

CensusOptions RunConfig::census_options() const {
    CensusOptions options;
    options.prime_budget = primes;
    options.tol = tol;
    options.verify = verify;
    options.assume_symmetric = assume_symmetric;
    options.cm_table = cm_table.empty() ? CmTable::builtin() : CmTable::from_file(cm_table);
    return options;
}

VerificationPlan parse_verify_list(std::string_view text) {
    VerificationPlan plan{false, false, false};
    text = trim(text);
    if (text == "none") {
        return plan;
    }
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        if (item == "lemma-key") {
            plan.lemma_key = true;
        } else if (item == "frobenius") {
            plan.frobenius = true;
        } else if (item == "j") {
            plan.j_census = true;
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown verification '" + std::string(item) +
                                                        "' (expected lemma-key, frobenius, j or none)");
        }
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return plan;
}

std::string to_string(OutputFormat format) {
    return format == OutputFormat::Json ? "json" : "md";
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "primes") {
        config.primes = parse_positive(key, value);
    } else if (key == "twist") {
        config.twist = static_cast<unsigned>(parse_positive(key, value));
    } else if (key == "tol") {
        config.tol = parse_tolerance(value);
    } else if (key == "cm-table") {
        config.cm_table = std::string(value);
    } else if (key == "verify") {
        config.verify = parse_verify_list(value);
    } else if (key == "format") {
        if (value == "json") {
            config.format = OutputFormat::Json;
        } else if (value == "md") {
            config.format = OutputFormat::Markdown;
        } else {
            throw Error(ErrorKind::InvalidArgument, "format must be json or md");
        }
    } else if (key == "assume-symmetric") {
        config.assume_symmetric = parse_bool(key, value);
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown configuration key '" + std::string(key) + "'");
    }
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidArgument, "cannot open config file '" + path + "'");
    }
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        view = trim(view.substr(0, view.find('#')));
        if (view.empty()) {
            continue;
        }
        auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::Parse, path + ":" + std::to_string(number) + ": expected key = value");
        }
        apply_setting(config, trim(view.substr(0, eq)), view.substr(eq + 1));
    }
    config.validate();
}

} // namespace prym
