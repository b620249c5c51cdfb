// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/bessel.hpp
//! The Bessel-type process dY = (1 - 2s) / (2Y) dt + dB and its first
//! hitting time of zero.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fraclap/quadrature.hpp"
#include "fraclap/random.hpp"

namespace fraclap
{
//---------------------------------------------------------------------------//
/*!
 * Density of the first hitting time of 0 started from y0:
 * \f[
     \Phi_{y_0}(t) = \frac{1}{t\,\Gamma(s)} \left(\frac{y_0^2}{2t}\right)^s
                     e^{-y_0^2 / (2t)}, \quad t > 0,
   \f]
 * and zero for t <= 0.
 */
double hitting_density(double t, double y0, double s);

//! Integral of the hitting density over (0, infinity), by quadrature in
//! log t with an analytic bound on the neglected t^{-1-s} tail.
QuadResult hitting_mass(double y0, double s, double tol);

//! Hitting-time CDF at each of the sorted times, by accumulating quadrature
//! of the density between consecutive points.
std::vector<double>
hitting_cdf(std::span<double const> sorted_times, double y0, double s, double tol);

//! Gamma(shape, 1) draw for 0 < shape < 1: a Marsaglia-Tsang draw at
//! shape + 1 scaled by U^{1/shape}.
double gamma_sample(double shape, RandomStream& rng);

//! Marsaglia-Tsang rejection sampler, shape >= 1.
double gamma_sample_large_shape(double shape, RandomStream& rng);

struct HittingTimeSample
{
    double t;
};

/*!
 * Map a Gamma(s, 1) draw g to the hitting time y0^2 / (2g).
 *
 * Substituting u = y0^2 / (2t) in the density gives u^{s-1} e^{-u} / Gamma(s),
 * so the image of a Gamma(s) variate has exactly the law Phi_{y0}. Draws
 * that underflow map to the largest finite double.
 */
double hitting_time_from_gamma(double y0, double g);

HittingTimeSample sample_hitting_time(double y0, double s, RandomStream& rng);

//---------------------------------------------------------------------------//
struct PathConfig
{
    double dt = 1e-4;
    //! Paths are stopped once they fall to this level
    double eps_boundary = 1e-4;
    //! dt is divided by this below 10 * eps_boundary
    double substep_factor = 100;
    std::size_t max_steps = 10'000'000;

    //! Defaults with eps_boundary = 1e-4 * y0
    static PathConfig for_start(double y0, double dt = 1e-4);

    void validate() const;
};

struct BesselPath
{
    std::vector<double> times;
    std::vector<double> values;
    //! Empty if the budget ran out first (simulate_path throws in that case)
    std::optional<double> absorbed_at;
};

/*!
 * Euler-Maruyama integrator for the Bessel SDE with absorption.
 *
 * The caller supplies the standard normal increment for each step, which
 * lets a Brownian x-component be advanced on the same time grid.
 */
class BesselStepper
{
  public:
    struct Step
    {
        double dt;
        bool absorbed;
        //! Fraction of this step elapsed at the (linearly interpolated)
        //! crossing of eps_boundary; 1 when not absorbed
        double fraction;
    };

    BesselStepper(double y0, double s, PathConfig const& cfg);

    Step advance(double normal_draw);

    double time() const { return time_; }
    double value() const { return value_; }
    std::size_t steps() const { return steps_; }
    bool absorbed() const { return absorbed_; }
    bool exhausted() const { return !absorbed_ && steps_ >= cfg_.max_steps; }

  private:
    PathConfig cfg_;
    double drift_coeff_;
    double time_ = 0;
    double value_;
    std::size_t steps_ = 0;
    bool absorbed_ = false;
};

/*!
 * Simulate one path to absorption, recording every step.
 *
 * The final point is the interpolated crossing time with value 0: the
 * process is stopped on the boundary. Throws BudgetError if max_steps is
 * exhausted first.
 */
BesselPath simulate_path(double y0, double s, PathConfig const& cfg, RandomStream& rng);

struct AbsorptionResult
{
    bool absorbed;
    //! Crossing time if absorbed, else the time reached
    double time;
    //! Value at the last step (0 if absorbed)
    double last_value;
    std::size_t steps;
};

//! Same dynamics as simulate_path without storing the path; an exhausted
//! budget is reported rather than thrown.
AbsorptionResult simulate_absorption(double y0,
                                     double s,
                                     PathConfig const& cfg,
                                     RandomStream& rng);

}  // namespace fraclap
