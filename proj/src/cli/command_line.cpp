// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cli/command_line.cpp
//---------------------------------------------------------------------------//
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fraclap/cli/runner.hpp"
#include "fraclap/errors.hpp"

namespace fraclap::cli
{
namespace
{
using nlohmann::json;

struct Flags
{
    std::string mode_positional;
    std::string mode_option;
    std::string config_path;
    std::optional<double> s;
    std::optional<int> n;
    std::vector<std::string> points;
    std::optional<std::string> function;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> dt;
    std::optional<double> tol;
    std::optional<std::string> out;
    std::optional<std::string> format;
};

std::vector<double> parse_point(std::string const& text)
{
    std::vector<double> coords;
    std::size_t begin = 0;
    while (true)
    {
        auto const end = std::min(text.find(',', begin), text.size());
        double v = 0;
        auto const* first = text.data() + begin;
        auto const* last = text.data() + end;
        auto const [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last)
            throw ConfigError("--point '" + text + "': expected comma-separated numbers");
        coords.push_back(v);
        if (end == text.size())
            break;
        begin = end + 1;
    }
    return coords;
}

std::string read_all(std::istream& is)
{
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

//! Merge flag overrides into the config document.
void apply_flags(Flags const& f, json& doc)
{
    if (!f.mode_option.empty() && !f.mode_positional.empty()
        && f.mode_option != f.mode_positional)
    {
        throw ConfigError("mode given twice with different values: '" + f.mode_positional
                          + "' and '" + f.mode_option + "'");
    }
    if (!f.mode_positional.empty())
        doc["mode"] = f.mode_positional;
    if (!f.mode_option.empty())
        doc["mode"] = f.mode_option;
    if (f.s)
        doc["params"]["s"] = *f.s;
    if (f.n)
        doc["params"]["n"] = *f.n;
    if (!f.points.empty())
    {
        json pts = json::array();
        for (auto const& p : f.points)
            pts.push_back(parse_point(p));
        doc["points"] = pts;
    }
    if (f.function)
        doc["function"] = *f.function;
    if (f.samples)
        doc["n_samples"] = *f.samples;
    if (f.seed)
        doc["seed"] = *f.seed;
    if (f.dt)
        doc["dt"] = *f.dt;
    if (f.tol)
    {
        bool const trace = doc.value("mode", std::string{}) == "trace";
        doc["tolerances"][trace ? "trace" : "quad"] = *f.tol;
    }
    if (f.out)
        doc["output"]["path"] = *f.out;
    if (f.format)
        doc["output"]["format"] = *f.format;
}

void emit(std::string const& text, std::string const& path, std::ostream& out)
{
    if (path.empty() || path == "-")
    {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw std::ios_base::failure("cannot open output file '" + path + "'");
    file << text;
    if (!file)
        throw std::ios_base::failure("cannot write output file '" + path + "'");
}

int fail(json const& report, int code, std::ostream& out, std::ostream& err)
{
    err << "fraclap: " << report.at("error").at("message").get<std::string>() << "\n";
    out << report.dump(2) << "\n";
    return code;
}
}  // namespace

//---------------------------------------------------------------------------//
int command_line_main(std::vector<std::string> const& args,
                      std::istream& in,
                      std::ostream& out,
                      std::ostream& err)
{
    CLI::App app{"Fractional Laplacian and s-harmonic extension experiments", "fraclap"};
    Flags f;
    app.add_option("MODE", f.mode_positional, "One of: " + mode_names());
    app.add_option("--mode", f.mode_option, "Mode (alternative to the positional form)");
    app.add_option("--config", f.config_path, "JSON experiment file, or - for stdin");
    app.add_option("--s", f.s, "Order s in (0, 1)");
    app.add_option("--n", f.n, "Dimension n");
    app.add_option("--point", f.points, "Point as comma-separated coordinates (repeatable)")
        ->allow_extra_args(false);
    app.add_option("--function", f.function, "Registry function, e.g. cos:xi=2");
    app.add_option("--samples", f.samples, "Monte Carlo sample count");
    app.add_option("--seed", f.seed, "Root seed");
    app.add_option("--dt", f.dt, "Path time step");
    app.add_option("--tol", f.tol, "Absolute tolerance of the primary computation");
    app.add_option("--out", f.out, "Report path (default: stdout)");
    app.add_option("--format", f.format, "json or csv");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return exit_ok;
    }
    catch (CLI::ParseError const& e)
    {
        return fail(error_report("usage", e.what()), exit_validation, out, err);
    }

    ExperimentConfig config;
    try
    {
        json doc = json::object();
        std::string source;
        if (!f.config_path.empty())
        {
            if (f.config_path == "-")
            {
                source = read_all(in);
            }
            else
            {
                std::ifstream file(f.config_path);
                if (!file)
                    throw ConfigError("cannot open config file '" + f.config_path + "'");
                source = read_all(file);
            }
            doc = parse_json_document(source);
            if (!doc.is_object())
                throw ConfigError("config: top level must be a JSON object");
        }
        apply_flags(f, doc);
        config = config_from_json(doc, source);
    }
    catch (ConfigError const& e)
    {
        return fail(error_report("validation", e.what()), exit_validation, out, err);
    }

    auto result = run(config);
    if (result.exit_code != exit_ok && result.report.contains("error"))
    {
        err << "fraclap: " << result.report["error"]["message"].get<std::string>() << "\n";
    }
    try
    {
        std::string const text = config.format == OutputFormat::csv
                                          && !result.report.contains("error")
                                      ? to_csv(config, result.report)
                                      : result.report.dump(2) + "\n";
        emit(text, config.output_path, out);
    }
    catch (std::ios_base::failure const& e)
    {
        return fail(error_report("io", e.what()), exit_validation, out, err);
    }
    return result.exit_code;
}

}  // namespace fraclap::cli
