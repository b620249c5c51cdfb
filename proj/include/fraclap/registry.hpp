// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/registry.hpp
//! Built-in bounded boundary functions, addressable by label.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fraclap/boundary_function.hpp"

namespace fraclap
{
using FunctionParameters = std::map<std::string, double>;

struct RegistryEntry
{
    std::string label;
    std::string description;
    //! Accepted parameter names with their defaults
    FunctionParameters defaults;
    std::function<BoundaryFunction(FunctionParameters const&)> make;
};

//! const, cos, gauss, rational
std::vector<RegistryEntry> const& registry();

/*!
 * Parse "label" or "label:key=value,key=value".
 *
 * Examples: "gauss", "const:c=1.5", "cos:xi=2". Throws ConfigError for an
 * unknown label (the message lists the available ones), unknown parameter
 * names, or malformed numbers.
 */
BoundaryFunction parse_function(std::string_view expr);

//! u = c
BoundaryFunction make_constant(double c);
//! u(x) = cos(xi x_1), with (-Delta)^s u = |xi|^{2s} u
BoundaryFunction make_cosine(double xi);
//! u(x) = exp(-|x|^2)
BoundaryFunction make_gauss();
//! u(x) = 1 / (1 + |x|^2)
BoundaryFunction make_rational();

//! Confluent hypergeometric 1F1(a; b; z) by its power series, |z| <= 10.
double hypergeometric_1f1(double a, double b, double z);

}  // namespace fraclap
