#pragma once

#include "prym/frobenius.hpp"
#include "prym/galois_cert.hpp"
#include "prym/prym_census.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace prym {

enum class OutputFormat { Json, Markdown };

struct RunConfig {
    std::size_t primes = kDefaultPrimeBudget;
    unsigned twist = kDefaultTwistExponent;
    double tol = 1e-12;
    /// Empty selects the built-in table.
    std::string cm_table;
    VerificationPlan verify;
    OutputFormat format = OutputFormat::Json;
    bool assume_symmetric = false;

    /// Throws InvalidArgument on a non-positive budget or a tolerance outside (0, 1).
    void validate() const;
    CensusOptions census_options() const;
};

/// Sets one key (`primes`, `twist`, `tol`, `cm-table`, `verify`, `format`,
/// `assume-symmetric`) from its textual value.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Reads `key = value` lines; `#` starts a comment. Unknown keys are errors.
void apply_config_file(RunConfig& config, const std::string& path);

/// Parses a comma-separated subset of {lemma-key, frobenius, j}; "none" clears all.
VerificationPlan parse_verify_list(std::string_view text);

std::string to_string(OutputFormat format);

} // namespace prym
