// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file statistics.cpp
//---------------------------------------------------------------------------//
#include "fraclap/statistics.hpp"

#include <algorithm>
#include <cmath>

#include "fraclap/errors.hpp"

namespace fraclap
{
double ks_distance_sorted(std::span<double const> sorted_samples,
                          std::span<double const> cdf_values)
{
    if (sorted_samples.size() != cdf_values.size() || sorted_samples.empty())
        throw DomainError("ks_distance: need equal, nonzero sizes");
    double const n = static_cast<double>(sorted_samples.size());
    double d = 0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i)
    {
        double const f = cdf_values[i];
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

double ks_distance(std::vector<double> samples,
                   std::function<double(double)> const& cdf)
{
    std::sort(samples.begin(), samples.end());
    std::vector<double> f(samples.size());
    std::transform(samples.begin(), samples.end(), f.begin(), cdf);
    return ks_distance_sorted(samples, f);
}

double ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    if (a.empty() || b.empty())
        throw DomainError("ks_two_sample: samples must be nonempty");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double const na = static_cast<double>(a.size());
    double const nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0;
    while (i < a.size() && j < b.size())
    {
        double const t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= t)
            ++i;
        while (j < b.size() && b[j] <= t)
            ++j;
        d = std::max(d, std::fabs(i / na - j / nb));
    }
    return d;
}

}  // namespace fraclap
