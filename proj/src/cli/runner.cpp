// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cli/runner.cpp
//---------------------------------------------------------------------------//
#include "fraclap/cli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "fraclap/bessel.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/fractional_laplacian.hpp"
#include "fraclap/kernel.hpp"
#include "fraclap/random.hpp"
#include "fraclap/registry.hpp"
#include "fraclap/special_functions.hpp"
#include "fraclap/statistics.hpp"
#include "fraclap/stochastic_extension.hpp"
#include "fraclap/version.hpp"

namespace fraclap::cli
{
namespace
{
using nlohmann::json;

HalfSpacePoint half_space_point(std::vector<double> const& pt)
{
    return {std::vector<double>(pt.begin(), pt.end() - 1), pt.back()};
}

json quad_diagnostics(QuadResult const& q)
{
    return {{"evaluations", q.evaluations}, {"err_estimate", q.err_estimate}};
}

json mc_diagnostics(MCEstimate const& e)
{
    return {{"n_samples", e.n_samples}, {"seed", e.seed}, {"std_error", e.std_error}};
}

json trace_diagnostics(NeumannTraceResult const& t)
{
    json raw = json::array();
    for (auto const& [y, v] : t.raw_sequence)
        raw.push_back({{"y", y}, {"scaled_derivative", v}});
    json d = {{"raw_sequence", raw},
              {"extrapolation_residual", t.extrapolation_residual},
              {"quadrature_error", t.quadrature_error},
              {"exponents", t.exponents},
              {"monotone", t.monotone}};
    d["estimated_exponent"] = t.estimated_exponent ? json(*t.estimated_exponent) : json(nullptr);
    return d;
}

//---------------------------------------------------------------------------//
json run_point(ExperimentConfig const& c,
               BoundaryFunction const& u,
               FracParams const& p,
               std::vector<double> const& pt)
{
    json r = {{"point", pt}};
    switch (c.mode)
    {
        case Mode::extend_quad: {
            auto const q = extension(u, half_space_point(pt), p, c.quad_tol);
            r["value"] = q.value;
            r["err"] = q.err_estimate;
            r["diagnostics"] = quad_diagnostics(q);
            break;
        }
        case Mode::extend_mc: {
            auto const e = mc_extension(u, half_space_point(pt), p, *c.n_samples, c.seed);
            r["value"] = e.mean;
            r["err"] = e.std_error;
            r["stderr"] = e.std_error;
            r["diagnostics"] = mc_diagnostics(e);
            break;
        }
        case Mode::extend_path: {
            auto const at = half_space_point(pt);
            auto cfg = PathConfig::for_start(at.y, c.dt);
            cfg.max_steps = c.max_steps;
            auto const policy = c.unabsorbed == "complete-exact"
                                    ? UnabsorbedPolicy::complete_exact
                                    : UnabsorbedPolicy::reject;
            auto const e = mc_extension_pathwise(u, at, p, cfg, *c.n_samples, c.seed, policy);
            r["value"] = e.estimate.mean;
            r["err"] = e.estimate.std_error;
            r["stderr"] = e.estimate.std_error;
            auto d = mc_diagnostics(e.estimate);
            d["dt"] = cfg.dt;
            d["eps_boundary"] = cfg.eps_boundary;
            d["max_steps"] = cfg.max_steps;
            d["unabsorbed"] = e.unabsorbed;
            d["completed_exactly"] = e.completed_exactly;
            d["total_steps"] = e.total_steps;
            r["diagnostics"] = d;
            break;
        }
        case Mode::pv: {
            auto const q = frac_laplacian_pv(u, pt, p, c.quad_tol);
            r["value"] = q.value;
            r["err"] = q.err_estimate;
            auto d = quad_diagnostics(q);
            if (u.known_fractional_laplacian)
            {
                try
                {
                    d["reference"] = u.known_fractional_laplacian(pt, p);
                }
                catch (DomainError const&)
                {
                }
            }
            r["diagnostics"] = d;
            break;
        }
        case Mode::trace: {
            auto const t = neumann_trace(u, pt, p, c.heights, c.trace_tol);
            r["value"] = t.value;
            r["err"] = t.extrapolation_residual + t.quadrature_error;
            r["diagnostics"] = trace_diagnostics(t);
            break;
        }
        case Mode::consistency: {
            ConsistencyConfig cc;
            cc.pv_tol = c.quad_tol;
            cc.trace_tol = c.trace_tol;
            cc.heights = c.heights;
            cc.mc_samples = c.n_samples.value_or(0);
            cc.seed = c.seed;
            auto const rep = consistency_report(u, pt, p, cc);
            r["value"] = rep.rel_discrepancy;
            r["err"] = rep.pv.err_estimate + rep.trace.extrapolation_residual
                       + rep.trace.quadrature_error;
            json d = {{"pv", rep.pv.value},
                      {"pv_err", rep.pv.err_estimate},
                      {"trace", rep.trace.value},
                      {"trace_diagnostics", trace_diagnostics(rep.trace)},
                      {"abs_discrepancy", rep.abs_discrepancy},
                      {"rel_discrepancy", rep.rel_discrepancy}};
            if (rep.extension_check)
            {
                auto const& x = *rep.extension_check;
                d["extension_check"] = {{"y", x.y},
                                        {"quadrature", x.quadrature.value},
                                        {"quadrature_err", x.quadrature.err_estimate},
                                        {"monte_carlo", x.monte_carlo.mean},
                                        {"monte_carlo_stderr", x.monte_carlo.std_error}};
            }
            r["diagnostics"] = d;
            break;
        }
        case Mode::validate:
            break;
    }
    return r;
}

//---------------------------------------------------------------------------//
struct Check
{
    std::string name;
    double value;
    double threshold;
    bool passed;
    json details = json::object();
};

std::vector<Check> invariant_suite(ExperimentConfig const& c)
{
    std::vector<Check> checks;
    double const s = c.s;

    {
        double worst = 0;
        for (int n : {1, 2})
        {
            for (double y : {0.1, 1.0, 10.0})
                worst = std::max(worst, std::fabs(kernel_mass(y, {n, s}, 1e-6).value - 1));
        }
        checks.push_back({"kernel mass", worst, 1e-5, worst <= 1e-5});
    }
    {
        FracParams const p(1, 0.5);
        double worst = 0;
        for (int i = 0; i < 100; ++i)
        {
            double const x = -5 + 0.1 * i;
            double const y = 0.05 + 0.03 * i;
            double const classical = y / (M_PI * (x * x + y * y));
            worst = std::max(worst,
                             std::fabs(poisson_kernel_radial(std::fabs(x), y, p) - classical)
                                 / classical);
        }
        checks.push_back({"classical reduction", worst, 1e-12, worst <= 1e-12});
    }
    {
        double worst = 0;
        for (int i = 1; i <= 50; ++i)
        {
            double const x = 0.173 * i + 0.05;
            worst = std::max(worst,
                             std::fabs(fraclap::gamma(x + 1) / (x * fraclap::gamma(x)) - 1));
        }
        checks.push_back({"gamma recurrence", worst, 1e-13, worst <= 1e-13});
    }
    {
        double worst = 0;
        for (double y0 : {1.0, 2.0})
            worst = std::max(worst, std::fabs(hitting_mass(y0, s, 1e-10).value - 1));
        checks.push_back({"hitting density mass", worst, 1e-8, worst <= 1e-8});
    }
    {
        std::size_t const count = 100000;
        std::vector<double> samples(count);
        RandomStream rng(c.seed);
        for (auto& t : samples)
            t = sample_hitting_time(1, s, rng).t;
        std::sort(samples.begin(), samples.end());
        auto const cdf = hitting_cdf(samples, 1, s, 1e-9);
        double const d = ks_distance_sorted(samples, cdf);
        checks.push_back({"hitting time KS", d, 0.01, d <= 0.01, {{"n_samples", count}}});
    }
    {
        FracParams const p(1, s);
        FieldFunction const y_squared = [](std::span<double const>, double y) { return y * y; };
        HalfSpacePoint const at{{0.0}, 1.0};
        double const target = 2 * (1 - s);
        double const exact = std::fabs(generator_apply(y_squared, at, p, 0x1p-10) - target);
        checks.push_back({"generator on y^2", exact, 1e-14, exact <= 1e-14});
        auto const g = generator_mc_check(y_squared, at, p, 1e-3, 100000, c.seed);
        double const dev = std::fabs(g.estimate.mean - target);
        double const allowed = 4 * g.estimate.std_error + 0.05;
        checks.push_back({"generator Monte Carlo",
                          dev,
                          allowed,
                          dev <= allowed,
                          {{"mean", g.estimate.mean}, {"std_error", g.estimate.std_error}}});
    }
    {
        double worst = 0;
        std::vector<double> const origin{0.0};
        for (double xi : {0.5, 1.0, 2.0})
        {
            double const symbol = std::pow(xi, 2 * s);
            auto const r = frac_laplacian_pv(make_cosine(xi), origin, {1, s}, 1e-8);
            worst = std::max(worst, std::fabs(r.value - symbol) / symbol);
        }
        checks.push_back({"symbol identity", worst, 1e-6, worst <= 1e-6});
    }
    {
        FracParams const p(1, s);
        HalfSpacePoint const at{{0.3}, 0.8};
        auto const u = make_gauss();
        double const tol = 1e-6;
        auto const q = extension(u, at, p, tol);
        auto const e = mc_extension(u, at, p, 100000, c.seed);
        double const dev = std::fabs(q.value - e.mean);
        double const allowed = 4 * e.std_error + tol;
        checks.push_back({"route agreement",
                          dev,
                          allowed,
                          dev <= allowed,
                          {{"quadrature", q.value}, {"monte_carlo", e.mean}}});
    }
    return checks;
}

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

//---------------------------------------------------------------------------//
json error_report(std::string const& kind, std::string const& message, json diagnostics)
{
    json e = {{"kind", kind}, {"message", message}};
    if (!diagnostics.empty())
        e["diagnostics"] = std::move(diagnostics);
    return {{"error", e}, {"version", version_string}};
}

RunResult run(ExperimentConfig const& config)
{
    auto const start = std::chrono::steady_clock::now();
    RunResult result;
    try
    {
        validate(config);
    }
    catch (ConfigError const& e)
    {
        return {exit_validation, error_report("validation", e.what())};
    }

    json results = json::array();
    try
    {
        if (config.mode == Mode::validate)
        {
            for (auto const& check : invariant_suite(config))
            {
                json d = check.details;
                d["check"] = check.name;
                d["threshold"] = check.threshold;
                d["passed"] = check.passed;
                results.push_back({{"point", json::array()},
                                   {"value", check.value},
                                   {"err", check.threshold},
                                   {"diagnostics", d}});
                if (!check.passed)
                    result.exit_code = exit_numerical;
            }
        }
        else
        {
            auto const u = parse_function(config.function);
            FracParams const p(config.n, config.s);
            for (auto const& pt : config.points)
                results.push_back(run_point(config, u, p, pt));
        }
    }
    catch (QuadratureError const& e)
    {
        json const d = {{"best_value", e.value()},
                        {"err_estimate", e.err_estimate()},
                        {"evaluations", e.evaluations()},
                        {"completed_results", results}};
        auto report = error_report("quadrature", e.what(), d);
        report["config"] = to_json(config);
        return {exit_numerical, report};
    }
    catch (NumericalError const& e)
    {
        auto report = error_report("numerical", e.what(), {{"completed_results", results}});
        report["config"] = to_json(config);
        return {exit_numerical, report};
    }
    catch (DomainError const& e)
    {
        return {exit_validation, error_report("domain", e.what())};
    }

    std::chrono::duration<double> const elapsed = std::chrono::steady_clock::now() - start;
    result.report = {{"config", to_json(config)},
                     {"results", results},
                     {"version", version_string},
                     {"wall_time_s", elapsed.count()}};
    return result;
}

//---------------------------------------------------------------------------//
std::string to_csv(ExperimentConfig const& config, json const& report)
{
    std::string out;
    if (config.n == 1)
    {
        out = "x,y";
    }
    else
    {
        for (int i = 1; i <= config.n; ++i)
            out += "x" + std::to_string(i) + ",";
        out += "y";
    }
    out += ",value,err\n";
    bool const half_space = uses_half_space_points(config.mode);
    for (auto const& r : report.at("results"))
    {
        auto const pt = r.at("point").get<std::vector<double>>();
        std::vector<double> coords(static_cast<std::size_t>(config.n) + 1, 0.0);
        std::copy_n(pt.begin(),
                    std::min(pt.size(), coords.size() - (half_space ? 0 : 1)),
                    coords.begin());
        for (double v : coords)
            out += format_number(v) + ",";
        out += format_number(r.at("value").get<double>()) + ","
               + format_number(r.at("err").get<double>()) + "\n";
    }
    return out;
}

}  // namespace fraclap::cli
