// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file random.cpp
//---------------------------------------------------------------------------//
#include "fraclap/random.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace fraclap
{
namespace
{
// Layer edges x_i (decreasing, x_256 = 0) and densities f(x_i) for the
// Marsaglia-Tsang ziggurat; layer 0 is the base strip plus the tail.
struct Ziggurat
{
    static constexpr double r = 3.6541528853610088;
    static constexpr double area = 0.00492867323399;
    std::array<double, 257> x;
    std::array<double, 257> f;

    Ziggurat()
    {
        auto density = [](double v) { return std::exp(-0.5 * v * v); };
        x[0] = area / density(r);
        x[1] = r;
        for (std::size_t i = 1; i < 255; ++i)
            x[i + 1] = std::sqrt(-2 * std::log(area / x[i] + density(x[i])));
        x[256] = 0;
        for (std::size_t i = 0; i < 257; ++i)
            f[i] = density(x[i]);
    }
};

Ziggurat const& ziggurat()
{
    static Ziggurat const table;
    return table;
}
}  // namespace

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream RandomStream::derive(std::uint64_t root_seed,
                                  std::uint64_t chunk,
                                  std::uint64_t substream)
{
    std::uint64_t const h = mix64(mix64(mix64(root_seed) ^ chunk) ^ (substream + 1));
    return RandomStream(h);
}

double RandomStream::normal()
{
    auto const& zig = ziggurat();
    while (true)
    {
        std::uint64_t const b = engine_();
        std::size_t const i = b & 0xff;
        // Signed uniform in (-1, 1) from the 53 high bits
        double const u = (static_cast<double>(b >> 11) + 0.5) * 0x1.0p-52 - 1;
        double const z = u * zig.x[i];
        if (std::fabs(z) < zig.x[i + 1])
            return z;
        if (i == 0)
        {
            double a;
            double c;
            do
            {
                a = -std::log(this->uniform()) / Ziggurat::r;
                c = -std::log(this->uniform());
            } while (2 * c < a * a);
            return u < 0 ? -(Ziggurat::r + a) : Ziggurat::r + a;
        }
        double const fz = std::exp(-0.5 * z * z);
        if (zig.f[i + 1] + this->uniform() * (zig.f[i] - zig.f[i + 1]) < fz)
            return z;
    }
}

}  // namespace fraclap
