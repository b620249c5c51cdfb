// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/statistics.hpp
//! Kolmogorov-Smirnov distances.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fraclap
{
//! sup |F_N - F| given sorted samples and F evaluated at each of them
double ks_distance_sorted(std::span<double const> sorted_samples,
                          std::span<double const> cdf_values);

//! sup |F_N - F| for an arbitrary sample
double ks_distance(std::vector<double> samples,
                   std::function<double(double)> const& cdf);

//! sup |F_A - F_B| between two empirical distributions
double ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace fraclap
