// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/cli/runner.hpp
//! Experiment execution and report emission.
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "fraclap/cli/config.hpp"

namespace fraclap::cli
{
enum ExitCode : int
{
    exit_ok = 0,
    exit_validation = 1,
    exit_numerical = 2,
};

struct RunResult
{
    int exit_code = exit_ok;
    //! {config, results, version, wall_time_s}, or {error, version}
    nlohmann::json report;
};

/*!
 * Execute a validated experiment.
 *
 * Numerical failures are caught and turned into an error report with exit
 * code 2; validate mode also returns 2 when any check fails.
 */
RunResult run(ExperimentConfig const& config);

//! Per-point CSV (x..., y, value, err) with round-trip precision
std::string to_csv(ExperimentConfig const& config, nlohmann::json const& report);

//! Machine-readable error object
nlohmann::json error_report(std::string const& kind,
                            std::string const& message,
                            nlohmann::json diagnostics = nlohmann::json::object());

/*!
 * Full command-line front end: parses flags, merges them over the config
 * file, runs, and writes the report to --out or `out`.
 */
int command_line_main(std::vector<std::string> const& args,
                      std::istream& in,
                      std::ostream& out,
                      std::ostream& err);

}  // namespace fraclap::cli
