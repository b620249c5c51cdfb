// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/stochastic_extension.hpp
//! Monte Carlo evaluation of w(x0, y0) = E[u(Z_tau)] for Z = (X, Y), X an
//! n-dimensional Brownian motion and Y the Bessel-type process, plus checks
//! of the generator of Z.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "fraclap/bessel.hpp"
#include "fraclap/boundary_function.hpp"
#include "fraclap/kernel.hpp"
#include "fraclap/special_functions.hpp"

namespace fraclap
{
struct MCEstimate
{
    double mean = 0;
    //! Unbiased sample standard deviation over sqrt(n_samples)
    double std_error = 0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
};

//! Samples per chunk; each chunk owns its random streams.
inline constexpr std::size_t mc_chunk_size = 16384;

/*!
 * Exact-hitting-time estimator.
 *
 * Per sample: tau from the Gamma reduction (substream 0 of the chunk), then
 * X_tau ~ N(x0, tau I_n) (substream 1), accumulate u(X_tau). Chunks are
 * combined in index order, so results do not depend on the thread count.
 */
MCEstimate mc_extension(BoundaryFunction const& u,
                        HalfSpacePoint const& at,
                        FracParams const& p,
                        std::size_t n_samples,
                        std::uint64_t seed);

//! What to do with a path still alive after max_steps.
enum class UnabsorbedPolicy
{
    //! Drop the sample and count it
    reject,
    //! Finish with an exact hitting time drawn from the current height
    //! (strong Markov property) and a matching Gaussian step in x
    complete_exact,
};

struct PathwiseEstimate
{
    MCEstimate estimate;
    std::size_t unabsorbed = 0;
    std::size_t completed_exactly = 0;
    std::size_t total_steps = 0;
};

/*!
 * Full simulation of Z: the Bessel path is integrated to absorption while X
 * receives Gaussian increments on the same (sub)step grid. The x-increment
 * of the crossing step is scaled by the same interpolation fraction as the
 * crossing time.
 */
PathwiseEstimate mc_extension_pathwise(BoundaryFunction const& u,
                                       HalfSpacePoint const& at,
                                       FracParams const& p,
                                       PathConfig const& cfg,
                                       std::size_t n_samples,
                                       std::uint64_t seed,
                                       UnabsorbedPolicy policy = UnabsorbedPolicy::reject);

//---------------------------------------------------------------------------//
//! Test function f(x, y) on the half-space.
using FieldFunction = std::function<double(std::span<double const>, double)>;

/*!
 * (1 - 2s) / (2y) df/dy + 1/2 Laplacian_{x,y} f by second-order centred
 * differences with step h. Requires y > h.
 */
double generator_apply(FieldFunction const& f,
                       HalfSpacePoint const& at,
                       FracParams const& p,
                       double h);

struct GeneratorCheck
{
    MCEstimate estimate;
    //! Samples discarded because Y reached eps within the horizon
    std::size_t boundary_hits = 0;
};

/*!
 * Mean of (f(Z_t) - f(z)) / t over Euler-Maruyama paths of Z on [0, t]
 * (`substeps` equal steps). Requires y >= 5 sqrt(t).
 */
GeneratorCheck generator_mc_check(FieldFunction const& f,
                                  HalfSpacePoint const& at,
                                  FracParams const& p,
                                  double t,
                                  std::size_t n_samples,
                                  std::uint64_t seed,
                                  std::size_t substeps = 16);

}  // namespace fraclap
