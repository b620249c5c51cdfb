// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadrature.cpp
//---------------------------------------------------------------------------//
#include "fraclap/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap
{
namespace
{
// 15-point Kronrod abscissae (descending, last is the centre) and weights;
// the odd-indexed abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

constexpr double eps = std::numeric_limits<double>::epsilon();

struct Panel
{
    double a;
    double b;
    double value;
    double err;
    bool at_floor;
};

Panel gauss_kronrod(ScalarFunction const& f, double a, double b)
{
    double const centre = 0.5 * (a + b);
    double const half = 0.5 * (b - a);

    double const fc = f(centre);
    double kronrod = fc * wgk[7];
    double gauss = fc * wg[3];
    double abs_sum = std::fabs(kronrod);
    for (std::size_t j = 0; j < 7; ++j)
    {
        double const dx = half * xgk[j];
        double const f1 = f(centre - dx);
        double const f2 = f(centre + dx);
        kronrod += wgk[j] * (f1 + f2);
        abs_sum += wgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1)
        {
            gauss += wg[j / 2] * (f1 + f2);
        }
    }

    Panel p{a, b, kronrod * half, std::fabs((kronrod - gauss) * half), false};
    if (!std::isfinite(p.value))
    {
        throw NumericalError("integrate_adaptive: non-finite integrand on ["
                             + std::to_string(a) + ", " + std::to_string(b)
                             + "]");
    }
    double const floor = 50 * eps * abs_sum * std::fabs(half);
    if (p.err <= floor || half <= 4 * eps * std::max(std::fabs(a), std::fabs(b)))
    {
        p.err = std::max(p.err, floor);
        p.at_floor = true;
    }
    return p;
}
}  // namespace

//---------------------------------------------------------------------------//
QuadResult integrate_adaptive(ScalarFunction const& f,
                              std::span<double const> breakpoints,
                              double abs_tol,
                              QuadOptions const& opts)
{
    if (breakpoints.size() < 2)
    {
        throw DomainError("integrate_adaptive: need at least two breakpoints");
    }
    if (!(abs_tol > 0))
    {
        throw DomainError("integrate_adaptive: tolerance must be positive");
    }
    constexpr std::size_t evals_per_panel = 15;
    std::size_t const initial = breakpoints.size() - 1;
    if (initial * evals_per_panel > opts.max_evaluations)
    {
        throw QuadratureError("integrate_adaptive: initial panelling exceeds "
                              "the evaluation budget",
                              0.0,
                              std::numeric_limits<double>::infinity(),
                              0);
    }

    std::vector<Panel> panels;
    panels.reserve(initial * 2);
    auto by_err = [&panels](std::size_t i, std::size_t j) {
        return panels[i].err < panels[j].err;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_err)>
        heap(by_err);

    std::size_t evaluations = 0;
    double total_err = 0;
    for (std::size_t i = 0; i < initial; ++i)
    {
        if (!(breakpoints[i + 1] > breakpoints[i]))
        {
            throw DomainError("integrate_adaptive: breakpoints must increase");
        }
        panels.push_back(gauss_kronrod(f, breakpoints[i], breakpoints[i + 1]));
        evaluations += evals_per_panel;
        total_err += panels.back().err;
        heap.push(panels.size() - 1);
    }

    auto finish = [&panels]() {
        std::vector<std::size_t> order(panels.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&panels](auto i, auto j) {
            return panels[i].a < panels[j].a;
        });
        double value = 0;
        double err = 0;
        for (auto i : order)
        {
            value += panels[i].value;
            err += panels[i].err;
        }
        return std::pair{value, err};
    };

    std::size_t since_resum = 0;
    while (total_err > abs_tol)
    {
        bool const budget_left
            = evaluations + 2 * evals_per_panel <= opts.max_evaluations;
        if (heap.empty() || !budget_left)
        {
            auto [value, err] = finish();
            if (err <= abs_tol)
                return {value, err, evaluations};
            throw QuadratureError(
                budget_left
                    ? "integrate_adaptive: tolerance below roundoff level"
                    : "integrate_adaptive: evaluation budget exhausted",
                value,
                err,
                evaluations);
        }
        std::size_t const worst = heap.top();
        heap.pop();
        if (panels[worst].at_floor)
        {
            // Cannot be refined further; its error stays in the total.
            continue;
        }
        Panel const old = panels[worst];
        double const mid = 0.5 * (old.a + old.b);
        Panel left = gauss_kronrod(f, old.a, mid);
        Panel right = gauss_kronrod(f, mid, old.b);
        evaluations += 2 * evals_per_panel;
        total_err += left.err + right.err - old.err;

        panels[worst] = left;
        heap.push(worst);
        panels.push_back(right);
        heap.push(panels.size() - 1);

        if (++since_resum == 1000)
        {
            // Running updates drift; recompute exactly now and then.
            total_err = 0;
            for (auto const& p : panels)
                total_err += p.err;
            since_resum = 0;
        }
    }

    auto [value, err] = finish();
    return {value, err, evaluations};
}

QuadResult integrate_adaptive(ScalarFunction const& f,
                              double a,
                              double b,
                              double abs_tol,
                              QuadOptions const& opts)
{
    std::array<double, 2> const bp{a, b};
    return integrate_adaptive(f, bp, abs_tol, opts);
}

//---------------------------------------------------------------------------//
std::vector<double> radial_breakpoints(RadialPanelling const& spec)
{
    if (!(spec.r_max > spec.r_min) || !(spec.inner_scale > 0)
        || !(spec.feature_scale > 0))
    {
        throw DomainError("radial_breakpoints: invalid panelling");
    }
    std::vector<double> edges{spec.r_min};
    double r = spec.r_min;
    double const first = spec.inner_scale / 4;
    while (r < spec.r_max)
    {
        double width = std::max(first, r);
        if (spec.oscillatory || r < spec.resolved_extent)
        {
            width = std::min(width, spec.feature_scale);
        }
        double next = r + width;
        // Avoid a sliver at the end.
        if (next > spec.r_max || spec.r_max - next < 0.25 * width)
        {
            next = spec.r_max;
        }
        edges.push_back(next);
        r = next;
    }
    return edges;
}

//---------------------------------------------------------------------------//
double integrate_sphere(int n,
                        SphereFunction const& g,
                        double radius,
                        double feature_scale,
                        double abs_tol,
                        std::size_t& evaluations,
                        QuadOptions const& opts)
{
    using std::numbers::pi;
    auto panels_for = [feature_scale](double arc_length) {
        auto const count = static_cast<std::size_t>(
            std::ceil(arc_length / feature_scale));
        return std::max<std::size_t>(count, 4);
    };
    auto uniform = [](double a, double b, std::size_t count) {
        std::vector<double> bp(count + 1);
        for (std::size_t i = 0; i <= count; ++i)
            bp[i] = a + (b - a) * static_cast<double>(i) / count;
        bp.back() = b;
        return bp;
    };

    switch (n)
    {
        case 1: {
            std::array<double, 1> plus{1.0};
            std::array<double, 1> minus{-1.0};
            evaluations += 2;
            return g(plus) + g(minus);
        }
        case 2: {
            auto const bp = uniform(0, 2 * pi, panels_for(2 * pi * radius));
            std::array<double, 2> omega{};
            auto result = integrate_adaptive(
                [&](double phi) {
                    omega = {std::cos(phi), std::sin(phi)};
                    return g(omega);
                },
                bp,
                abs_tol,
                opts);
            evaluations += result.evaluations;
            return result.value;
        }
        case 3: {
            auto const bp_polar = uniform(0, pi, panels_for(pi * radius));
            // Azimuthal integrals get a share of the tolerance; the polar
            // weight sin(theta) is at most one.
            double const inner_tol = abs_tol / (4 * pi);
            std::array<double, 3> omega{};
            auto result = integrate_adaptive(
                [&](double theta) {
                    double const st = std::sin(theta);
                    double const ct = std::cos(theta);
                    auto const bp_az
                        = uniform(0, 2 * pi, panels_for(2 * pi * radius * st));
                    auto inner = integrate_adaptive(
                        [&](double phi) {
                            omega = {st * std::cos(phi), st * std::sin(phi), ct};
                            return g(omega);
                        },
                        bp_az,
                        inner_tol,
                        opts);
                    evaluations += inner.evaluations;
                    return st * inner.value;
                },
                bp_polar,
                abs_tol / 2,
                opts);
            return result.value;
        }
        default:
            throw DomainError("integrate_sphere: only n = 1, 2, 3 supported");
    }
}

}  // namespace fraclap
