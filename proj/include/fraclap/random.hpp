// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/random.hpp
//! Reproducible random streams.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <random>

namespace fraclap
{
//---------------------------------------------------------------------------//
/*!
 * A Mersenne-Twister stream with portable uniform and normal variates.
 *
 * The engine output is fixed by the C++ standard; the variates below are
 * computed here rather than through <random> distributions so that a
 * (seed, chunk, substream) triple produces the same numbers with any
 * standard library.
 */
class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    //! Independent stream for a chunk of work under a root seed
    static RandomStream
    derive(std::uint64_t root_seed, std::uint64_t chunk, std::uint64_t substream);

    std::uint64_t bits() { return engine_(); }

    //! Uniform on the open interval (0, 1)
    double uniform()
    {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    //! Standard normal (256-layer ziggurat)
    double normal();

  private:
    std::mt19937_64 engine_;
};

//! SplitMix64 finalizer, used to decorrelate derived seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace fraclap
