// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file registry.cpp
//---------------------------------------------------------------------------//
#include "fraclap/registry.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fraclap/errors.hpp"
#include "fraclap/special_functions.hpp"

namespace fraclap
{
namespace
{
double squared_norm(std::span<double const> x)
{
    double sum = 0;
    for (double v : x)
        sum += v * v;
    return sum;
}

double parse_number(std::string_view text, std::string_view context)
{
    double value = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
    {
        throw ConfigError("function parameter '" + std::string(context)
                          + "': cannot parse number '" + std::string(text) + "'");
    }
    return value;
}

std::string available_labels()
{
    std::ostringstream os;
    bool first = true;
    for (auto const& entry : registry())
    {
        os << (first ? "" : ", ") << entry.label;
        first = false;
    }
    return os.str();
}
}  // namespace

//---------------------------------------------------------------------------//
double hypergeometric_1f1(double a, double b, double z)
{
    if (std::fabs(z) > 10)
        throw DomainError("hypergeometric_1f1: series used only for |z| <= 10");
    double term = 1;
    double sum = 1;
    for (int k = 0; k < 500; ++k)
    {
        term *= (a + k) / (b + k) * z / (k + 1);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum))
            break;
    }
    return sum;
}

//---------------------------------------------------------------------------//
BoundaryFunction make_constant(double c)
{
    BoundaryFunction u;
    u.label = "const";
    u.eval = [c](std::span<double const>) { return c; };
    u.bound = c != 0 ? std::fabs(c) : 1.0;
    u.tail = ConstantTail{c};
    u.second_derivative_bound = 0;
    u.fourth_derivative_bound = 0;
    u.laplacian = [](std::span<double const>) { return 0.0; };
    u.known_extension = [c](std::span<double const>, double, FracParams const&) {
        return c;
    };
    u.known_fractional_laplacian = [](std::span<double const>, FracParams const&) {
        return 0.0;
    };
    return u;
}

BoundaryFunction make_cosine(double xi)
{
    if (xi == 0 || !std::isfinite(xi))
    {
        throw ConfigError("cos: frequency xi must be finite and nonzero "
                          "(use const for xi = 0)");
    }
    double const freq = std::fabs(xi);
    BoundaryFunction u;
    u.label = "cos";
    u.eval = [xi](std::span<double const> x) { return std::cos(xi * x[0]); };
    u.bound = 1;
    u.feature_scale = std::numbers::pi / (2 * freq);
    u.tail = HarmonicTail{freq, 1.0};
    u.second_derivative_bound = freq * freq;
    u.fourth_derivative_bound = freq * freq * freq * freq;
    u.laplacian = [xi](std::span<double const> x) {
        return -xi * xi * std::cos(xi * x[0]);
    };
    u.fourier_frequency = freq;
    // Fourier multiplier of the kernel: 2^{1-s}/Gamma(s) t^s K_s(t)
    u.known_extension = [xi, freq](std::span<double const> x, double y,
                                   FracParams const& p) {
        double const t = freq * y;
        double const s = p.s();
        double const profile
            = t == 0 ? 1.0
                     : std::pow(2.0, 1 - s) / gamma(s) * std::pow(t, s)
                           * std::cyl_bessel_k(s, t);
        return std::cos(xi * x[0]) * profile;
    };
    u.known_fractional_laplacian = [xi, freq](std::span<double const> x,
                                              FracParams const& p) {
        return std::pow(freq, 2 * p.s()) * std::cos(xi * x[0]);
    };
    return u;
}

BoundaryFunction make_gauss()
{
    BoundaryFunction u;
    u.label = "gauss";
    u.eval = [](std::span<double const> x) { return std::exp(-squared_norm(x)); };
    u.bound = 1;
    u.feature_scale = 0.5;
    u.tail = EnvelopeTail{[](double r) { return std::exp(-r * r); }};
    // Along any line the profile is e^{-c} e^{-t^2}, whose 2nd and 4th
    // derivatives peak at 2 and 12.
    u.second_derivative_bound = 2;
    u.fourth_derivative_bound = 12;
    u.laplacian = [](std::span<double const> x) {
        double const r2 = squared_norm(x);
        return (4 * r2 - 2 * static_cast<double>(x.size())) * std::exp(-r2);
    };
    u.known_fractional_laplacian = [](std::span<double const> x, FracParams const& p) {
        double const half_n = 0.5 * p.n();
        return std::pow(4.0, p.s()) * gamma(half_n + p.s()) / gamma(half_n)
               * hypergeometric_1f1(half_n + p.s(), half_n, -squared_norm(x));
    };
    return u;
}

BoundaryFunction make_rational()
{
    BoundaryFunction u;
    u.label = "rational";
    u.eval = [](std::span<double const> x) { return 1 / (1 + squared_norm(x)); };
    u.bound = 1;
    u.feature_scale = 0.5;
    u.tail = EnvelopeTail{[](double r) { return 1 / (1 + r * r); }};
    // Along a line: 1/(b + t^2) with b >= 1; derivatives peak at t = 0.
    u.second_derivative_bound = 2;
    u.fourth_derivative_bound = 24;
    u.laplacian = [](std::span<double const> x) {
        double const r2 = squared_norm(x);
        double const q = 1 / (1 + r2);
        return (6 * r2 - 2) * q * q * q
               - 2 * (static_cast<double>(x.size()) - 1) * q * q;
    };
    // n = 1 only: the Fourier transform is pi e^{-|xi|}.
    u.known_fractional_laplacian = [](std::span<double const> x, FracParams const& p) {
        if (p.n() != 1)
        {
            throw DomainError("rational: closed-form fractional Laplacian "
                              "known only for n = 1");
        }
        double const a = 1 + 2 * p.s();
        return gamma(a) * std::pow(1 + x[0] * x[0], -0.5 * a)
               * std::cos(a * std::atan(x[0]));
    };
    return u;
}

//---------------------------------------------------------------------------//
std::vector<RegistryEntry> const& registry()
{
    static std::vector<RegistryEntry> const entries = {
        {"const",
         "u(x) = c",
         {{"c", 1.0}},
         [](FunctionParameters const& p) { return make_constant(p.at("c")); }},
        {"cos",
         "u(x) = cos(xi x_1)",
         {{"xi", 1.0}},
         [](FunctionParameters const& p) { return make_cosine(p.at("xi")); }},
        {"gauss",
         "u(x) = exp(-|x|^2)",
         {},
         [](FunctionParameters const&) { return make_gauss(); }},
        {"rational",
         "u(x) = 1 / (1 + |x|^2)",
         {},
         [](FunctionParameters const&) { return make_rational(); }},
    };
    return entries;
}

BoundaryFunction parse_function(std::string_view expr)
{
    auto const colon = expr.find(':');
    std::string_view const label = expr.substr(0, colon);
    RegistryEntry const* entry = nullptr;
    for (auto const& candidate : registry())
    {
        if (candidate.label == label)
            entry = &candidate;
    }
    if (!entry)
    {
        throw ConfigError("unknown function '" + std::string(label)
                          + "'; available: " + available_labels());
    }

    FunctionParameters params = entry->defaults;
    if (colon != std::string_view::npos)
    {
        std::string_view rest = expr.substr(colon + 1);
        while (!rest.empty())
        {
            auto const comma = rest.find(',');
            std::string_view const item = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view{}
                                                   : rest.substr(comma + 1);
            auto const eq = item.find('=');
            if (eq == std::string_view::npos)
            {
                throw ConfigError("function parameter '" + std::string(item)
                                  + "' is not of the form key=value");
            }
            std::string const key(item.substr(0, eq));
            if (!entry->defaults.contains(key))
            {
                throw ConfigError("function '" + entry->label
                                  + "' has no parameter '" + key + "'");
            }
            params[key] = parse_number(item.substr(eq + 1), key);
        }
    }
    return entry->make(params);
}

}  // namespace fraclap
