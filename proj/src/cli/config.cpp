// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cli/config.cpp
//---------------------------------------------------------------------------//
#include "fraclap/cli/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstring>
#include <set>

#include "fraclap/errors.hpp"
#include "fraclap/registry.hpp"

namespace fraclap::cli
{
namespace
{
using nlohmann::json;

constexpr std::array<std::pair<Mode, std::string_view>, 7> mode_table = {{
    {Mode::extend_quad, "extend-quad"},
    {Mode::extend_mc, "extend-mc"},
    {Mode::extend_path, "extend-path"},
    {Mode::pv, "pv"},
    {Mode::trace, "trace"},
    {Mode::consistency, "consistency"},
    {Mode::validate, "validate"},
}};

//---------------------------------------------------------------------------//
// Minimal scanner over already-valid JSON that records where each value
// starts, so that schema errors can cite a line.
class LineScanner
{
  public:
    explicit LineScanner(std::string_view text) : text_(text) {}

    std::vector<std::pair<std::string, int>> scan()
    {
        value("");
        return std::move(lines_);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    std::vector<std::pair<std::string, int>> lines_;

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
        {
            if (text_[pos_] == '\n')
                ++line_;
            ++pos_;
        }
    }

    std::string string_token()
    {
        std::string out;
        ++pos_;  // opening quote
        while (pos_ < text_.size() && text_[pos_] != '"')
        {
            if (text_[pos_] == '\\')
                ++pos_;
            if (pos_ < text_.size())
                out += text_[pos_++];
        }
        ++pos_;  // closing quote
        return out;
    }

    static std::string escape(std::string const& key)
    {
        std::string out;
        for (char c : key)
        {
            if (c == '~')
                out += "~0";
            else if (c == '/')
                out += "~1";
            else
                out += c;
        }
        return out;
    }

    void value(std::string const& pointer)
    {
        skip_space();
        if (pos_ >= text_.size())
            return;
        lines_.emplace_back(pointer.empty() ? "/" : pointer, line_);
        char const c = text_[pos_];
        if (c == '{')
        {
            ++pos_;
            skip_space();
            while (pos_ < text_.size() && text_[pos_] != '}')
            {
                std::string const key = string_token();
                skip_space();
                ++pos_;  // colon
                value(pointer + "/" + escape(key));
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == ',')
                {
                    ++pos_;
                    skip_space();
                }
            }
            ++pos_;
        }
        else if (c == '[')
        {
            ++pos_;
            skip_space();
            for (std::size_t index = 0; pos_ < text_.size() && text_[pos_] != ']'; ++index)
            {
                value(pointer + "/" + std::to_string(index));
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == ',')
                {
                    ++pos_;
                    skip_space();
                }
            }
            ++pos_;
        }
        else if (c == '"')
        {
            string_token();
        }
        else
        {
            while (pos_ < text_.size() && !std::strchr(",]} \t\r\n", text_[pos_]))
                ++pos_;
        }
    }
};

//---------------------------------------------------------------------------//
class Reader
{
  public:
    Reader(std::string_view source)
    {
        if (!source.empty())
            lines_ = value_lines(source);
    }

    [[noreturn]] void fail(std::string const& pointer, std::string const& message) const
    {
        std::string where = pointer.empty() ? "/" : pointer;
        for (auto const& [p, line] : lines_)
        {
            if (p == where)
            {
                where = "line " + std::to_string(line) + " (" + where + ")";
                break;
            }
        }
        throw ConfigError("config " + where + ": " + message);
    }

    double number(json const& v, std::string const& pointer) const
    {
        if (!v.is_number())
            fail(pointer, "expected a number");
        double const d = v.get<double>();
        if (!std::isfinite(d))
            fail(pointer, "expected a finite number");
        return d;
    }

    std::uint64_t unsigned_integer(json const& v, std::string const& pointer) const
    {
        if (!v.is_number_unsigned())
        {
            if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
                return static_cast<std::uint64_t>(v.get<std::int64_t>());
            fail(pointer, "expected a non-negative integer");
        }
        return v.get<std::uint64_t>();
    }

    std::string string(json const& v, std::string const& pointer) const
    {
        if (!v.is_string())
            fail(pointer, "expected a string");
        return v.get<std::string>();
    }

    std::vector<double> numbers(json const& v, std::string const& pointer) const
    {
        if (!v.is_array())
            fail(pointer, "expected an array of numbers");
        std::vector<double> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(number(v[i], pointer + "/" + std::to_string(i)));
        return out;
    }

    void only_keys(json const& obj,
                   std::string const& pointer,
                   std::set<std::string> const& allowed) const
    {
        if (!obj.is_object())
            fail(pointer, "expected an object");
        for (auto const& item : obj.items())
        {
            if (!allowed.contains(item.key()))
            {
                std::string names;
                for (auto const& a : allowed)
                    names += (names.empty() ? "" : ", ") + a;
                fail(pointer + "/" + item.key(),
                     "unknown key '" + item.key() + "' (allowed: " + names + ")");
            }
        }
    }

  private:
    std::vector<std::pair<std::string, int>> lines_;
};

[[noreturn]] void invalid(std::string const& field, std::string const& message)
{
    throw ConfigError("config /" + field + ": " + message);
}
}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(Mode mode)
{
    for (auto const& [m, name] : mode_table)
    {
        if (m == mode)
            return name;
    }
    return "unknown";
}

std::optional<Mode> parse_mode(std::string_view text)
{
    for (auto const& [m, name] : mode_table)
    {
        if (name == text)
            return m;
    }
    return std::nullopt;
}

std::string mode_names()
{
    std::string out;
    for (auto const& entry : mode_table)
        out += (out.empty() ? "" : " ") + std::string(entry.second);
    return out;
}

bool uses_half_space_points(Mode mode)
{
    return mode == Mode::extend_quad || mode == Mode::extend_mc
           || mode == Mode::extend_path;
}

std::vector<std::pair<std::string, int>> value_lines(std::string_view text)
{
    return LineScanner(text).scan();
}

//---------------------------------------------------------------------------//
ExperimentConfig config_from_json(json const& doc, std::string_view source)
{
    Reader const r(source);
    r.only_keys(doc,
                "",
                {"mode", "params", "function", "points", "tolerances", "heights",
                 "n_samples", "seed", "dt", "max_steps", "unabsorbed", "output"});

    ExperimentConfig c;
    if (!doc.contains("mode"))
        r.fail("", "missing required key 'mode' (one of: " + mode_names() + ")");
    auto const mode_text = r.string(doc["mode"], "/mode");
    auto const mode = parse_mode(mode_text);
    if (!mode)
        r.fail("/mode", "unknown mode '" + mode_text + "' (one of: " + mode_names() + ")");
    c.mode = *mode;

    if (doc.contains("params"))
    {
        auto const& params = doc["params"];
        r.only_keys(params, "/params", {"n", "s"});
        if (params.contains("n"))
        {
            auto const n = r.unsigned_integer(params["n"], "/params/n");
            if (n < 1 || n > 64)
                r.fail("/params/n", "dimension n must lie in [1, 64]");
            c.n = static_cast<int>(n);
        }
        if (params.contains("s"))
        {
            c.s = r.number(params["s"], "/params/s");
            if (!(c.s > 0 && c.s < 1))
                r.fail("/params/s", "order s must lie in (0, 1)");
        }
    }
    if (doc.contains("function"))
    {
        c.function = r.string(doc["function"], "/function");
        try
        {
            parse_function(c.function);
        }
        catch (ConfigError const& e)
        {
            r.fail("/function", e.what());
        }
    }
    if (doc.contains("points"))
    {
        auto const& pts = doc["points"];
        if (!pts.is_array())
            r.fail("/points", "expected an array of points");
        for (std::size_t i = 0; i < pts.size(); ++i)
            c.points.push_back(r.numbers(pts[i], "/points/" + std::to_string(i)));
    }
    if (doc.contains("tolerances"))
    {
        auto const& tol = doc["tolerances"];
        r.only_keys(tol, "/tolerances", {"quad", "trace"});
        if (tol.contains("quad"))
            c.quad_tol = r.number(tol["quad"], "/tolerances/quad");
        if (tol.contains("trace"))
            c.trace_tol = r.number(tol["trace"], "/tolerances/trace");
    }
    if (doc.contains("heights"))
        c.heights = r.numbers(doc["heights"], "/heights");
    if (doc.contains("n_samples"))
        c.n_samples = r.unsigned_integer(doc["n_samples"], "/n_samples");
    if (doc.contains("seed"))
        c.seed = r.unsigned_integer(doc["seed"], "/seed");
    if (doc.contains("dt"))
        c.dt = r.number(doc["dt"], "/dt");
    if (doc.contains("max_steps"))
        c.max_steps = r.unsigned_integer(doc["max_steps"], "/max_steps");
    if (doc.contains("unabsorbed"))
        c.unabsorbed = r.string(doc["unabsorbed"], "/unabsorbed");
    if (doc.contains("output"))
    {
        auto const& out = doc["output"];
        r.only_keys(out, "/output", {"path", "format"});
        if (out.contains("path"))
            c.output_path = r.string(out["path"], "/output/path");
        if (out.contains("format"))
        {
            auto const f = r.string(out["format"], "/output/format");
            if (f == "json")
                c.format = OutputFormat::json;
            else if (f == "csv")
                c.format = OutputFormat::csv;
            else
                r.fail("/output/format", "format must be 'json' or 'csv'");
        }
    }

    try
    {
        validate(c);
    }
    catch (ConfigError const& e)
    {
        // Re-raise with a line number when the pointer is known.
        std::string const what = e.what();
        std::string const prefix = "config ";
        auto const colon = what.find(": ");
        if (what.starts_with(prefix) && colon != std::string::npos)
            r.fail(what.substr(prefix.size(), colon - prefix.size()), what.substr(colon + 2));
        throw;
    }
    return c;
}

json parse_json_document(std::string_view text)
{
    try
    {
        return json::parse(text);
    }
    catch (json::parse_error const& e)
    {
        std::size_t const offset = std::min(e.byte, text.size());
        int line = 1;
        std::size_t line_start = 0;
        for (std::size_t i = 0; i + 1 < offset; ++i)
        {
            if (text[i] == '\n')
            {
                ++line;
                line_start = i + 1;
            }
        }
        std::size_t const column = offset > line_start ? offset - line_start : 1;
        throw ConfigError("config line " + std::to_string(line) + ", column "
                          + std::to_string(column) + ": invalid JSON: " + e.what());
    }
}

ExperimentConfig parse_config(std::string_view text)
{
    return config_from_json(parse_json_document(text), text);
}

//---------------------------------------------------------------------------//
void validate(ExperimentConfig const& c)
{
    if (c.n < 1 || c.n > 64)
        invalid("params/n", "dimension n must lie in [1, 64]");
    if (!(c.s > 0 && c.s < 1))
        invalid("params/s", "order s must lie in (0, 1)");
    try
    {
        parse_function(c.function);
    }
    catch (ConfigError const& e)
    {
        invalid("function", e.what());
    }
    if (!(c.quad_tol > 0))
        invalid("tolerances/quad", "tolerance must be positive");
    if (!(c.trace_tol > 0))
        invalid("tolerances/trace", "tolerance must be positive");
    if (!(c.dt > 0))
        invalid("dt", "time step must be positive");
    if (c.max_steps == 0)
        invalid("max_steps", "step budget must be positive");
    if (c.unabsorbed != "reject" && c.unabsorbed != "complete-exact")
        invalid("unabsorbed", "policy must be 'reject' or 'complete-exact'");

    bool const quadrature_mode = c.mode == Mode::extend_quad || c.mode == Mode::pv
                                 || c.mode == Mode::trace || c.mode == Mode::consistency;
    if (quadrature_mode && c.n > 3)
        invalid("params/n", "deterministic quadrature supports n <= 3; use extend-mc");

    if (c.mode != Mode::validate)
    {
        if (c.points.empty())
            invalid("points", "mode " + std::string(to_string(c.mode)) + " needs at least one point");
        std::size_t const width = static_cast<std::size_t>(c.n)
                                  + (uses_half_space_points(c.mode) ? 1 : 0);
        for (std::size_t i = 0; i < c.points.size(); ++i)
        {
            auto const& pt = c.points[i];
            std::string const field = "points/" + std::to_string(i);
            if (pt.size() != width)
            {
                invalid(field,
                        "expected " + std::to_string(width) + " coordinates ("
                            + (uses_half_space_points(c.mode) ? "x_1..x_n, y" : "x_1..x_n")
                            + "), got " + std::to_string(pt.size()));
            }
            for (double v : pt)
            {
                if (!std::isfinite(v))
                    invalid(field, "coordinates must be finite");
            }
            if (uses_half_space_points(c.mode))
            {
                double const y = pt.back();
                if (c.mode == Mode::extend_quad ? y < 0 : !(y > 0))
                {
                    invalid(field,
                            c.mode == Mode::extend_quad ? "height y must be >= 0"
                                                        : "height y must be > 0");
                }
            }
        }
    }
    if (c.mode == Mode::extend_mc || c.mode == Mode::extend_path)
    {
        if (!c.n_samples)
            invalid("n_samples", "mode " + std::string(to_string(c.mode)) + " requires n_samples");
        if (*c.n_samples < 2)
            invalid("n_samples", "need at least 2 samples");
    }
    if (c.mode == Mode::consistency && c.n_samples && *c.n_samples == 1)
        invalid("n_samples", "need 0 (no cross-check) or at least 2 samples");
    if (c.mode == Mode::trace || c.mode == Mode::consistency)
    {
        if (c.heights.size() < 3)
            invalid("heights", "need at least 3 heights");
        for (std::size_t i = 0; i < c.heights.size(); ++i)
        {
            if (!(c.heights[i] > 0))
                invalid("heights/" + std::to_string(i), "heights must be positive");
            if (i > 0 && !(c.heights[i] <= 0.5 * c.heights[i - 1] * (1 + 1e-12)))
            {
                invalid("heights/" + std::to_string(i),
                        "heights must decrease by a ratio of at most 1/2");
            }
        }
    }
}

//---------------------------------------------------------------------------//
nlohmann::json to_json(ExperimentConfig const& c)
{
    json doc;
    doc["mode"] = std::string(to_string(c.mode));
    doc["params"] = {{"n", c.n}, {"s", c.s}};
    doc["function"] = c.function;
    doc["points"] = c.points;
    doc["tolerances"] = {{"quad", c.quad_tol}, {"trace", c.trace_tol}};
    doc["heights"] = c.heights;
    if (c.n_samples)
        doc["n_samples"] = *c.n_samples;
    doc["seed"] = c.seed;
    doc["dt"] = c.dt;
    doc["max_steps"] = c.max_steps;
    doc["unabsorbed"] = c.unabsorbed;
    doc["output"] = {{"path", c.output_path},
                     {"format", c.format == OutputFormat::json ? "json" : "csv"}};
    return doc;
}

}  // namespace fraclap::cli
