// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/cli/config.hpp
//! Experiment description: JSON schema, validation and serialization.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fraclap::cli
{
enum class Mode
{
    extend_quad,
    extend_mc,
    extend_path,
    pv,
    trace,
    consistency,
    validate,
};

enum class OutputFormat
{
    json,
    csv,
};

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);
//! Every mode name, space separated
std::string mode_names();

struct ExperimentConfig
{
    Mode mode = Mode::extend_quad;
    int n = 1;
    double s = 0.5;
    std::string function = "gauss";
    //! (x_1..x_n, y) for extension modes, (x_1..x_n) otherwise
    std::vector<std::vector<double>> points;
    double quad_tol = 1e-8;
    double trace_tol = 1e-5;
    std::vector<double> heights = {0.2, 0.1, 0.05, 0.025};
    std::optional<std::size_t> n_samples;
    std::uint64_t seed = 1;
    double dt = 1e-4;
    std::size_t max_steps = 10'000'000;
    //! Pathwise mode: "reject" or "complete-exact"
    std::string unabsorbed = "reject";
    std::string output_path;
    OutputFormat format = OutputFormat::json;

    bool operator==(ExperimentConfig const&) const = default;
};

//! True for modes whose points live in the half-space (carry a y)
bool uses_half_space_points(Mode mode);

/*!
 * Build a config from a parsed JSON document.
 *
 * `source` is the original text, used to attach line numbers to errors.
 * Throws ConfigError naming the offending JSON pointer (and line).
 */
ExperimentConfig config_from_json(nlohmann::json const& doc, std::string_view source = {});

//! Parse JSON text; syntax errors become ConfigError with line and column.
nlohmann::json parse_json_document(std::string_view text);

//! Parse and validate a config document.
ExperimentConfig parse_config(std::string_view text);

nlohmann::json to_json(ExperimentConfig const& config);

//! Mode-specific checks; run before any computation. Throws ConfigError.
void validate(ExperimentConfig const& config);

//! Line (1-based) of the value at each JSON pointer in valid JSON text.
std::vector<std::pair<std::string, int>> value_lines(std::string_view text);

}  // namespace fraclap::cli
