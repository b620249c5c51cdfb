// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/parallel.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <functional>

namespace fraclap
{
//! Worker count: FRACLAP_THREADS if set to a positive integer, otherwise the
//! number of hardware threads.
std::size_t worker_count();

/*!
 * Run body(i) for i in [0, count) on up to worker_count() threads.
 *
 * Work items are claimed dynamically, so body must write its result to a
 * slot indexed by i. The first exception thrown by any item is rethrown.
 */
void parallel_for(std::size_t count, std::function<void(std::size_t)> const& body);

}  // namespace fraclap
