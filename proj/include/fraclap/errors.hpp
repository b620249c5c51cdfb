// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/errors.hpp
//! Exception types shared by the numerical modules.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fraclap
{
//! Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Gamma function evaluated at a non-positive integer.
class PoleError : public DomainError
{
  public:
    using DomainError::DomainError;
};

//! Numerical failure: an adaptive scheme could not meet its tolerance
//! within its evaluation budget.
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericalError
{
  public:
    QuadratureError(std::string const& what,
                    double value,
                    double err_estimate,
                    std::size_t evaluations)
        : NumericalError(what)
        , value_(value)
        , err_estimate_(err_estimate)
        , evaluations_(evaluations)
    {
    }

    //! Best value reached before the budget ran out
    double value() const noexcept { return value_; }
    double err_estimate() const noexcept { return err_estimate_; }
    std::size_t evaluations() const noexcept { return evaluations_; }

  private:
    double value_;
    double err_estimate_;
    std::size_t evaluations_;
};

//! Path simulation exhausted max_steps before absorption.
class BudgetError : public NumericalError
{
  public:
    using NumericalError::NumericalError;
};

//! Malformed user input (function expression, configuration file, flags).
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace fraclap
