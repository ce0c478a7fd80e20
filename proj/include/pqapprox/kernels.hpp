#pragma once

// Data-parallel grid kernels. Each kernel has a serial reference path and an
// OpenMP path; per-point results are computed identically by both, so the
// outputs agree bit for bit regardless of thread count.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace pqapprox {

enum class Execution { serial, parallel };

/// `points` equally spaced values from start to end inclusive; the last one is end exactly.
std::vector<double> uniform_grid(double start, double end, int points);

/// body(i) for i in [0, count). If any call throws, the exception of the
/// lowest failing index is rethrown after the loop.
void parallel_for(std::ptrdiff_t count, const std::function<void(std::ptrdiff_t)>& body,
                  Execution execution = Execution::parallel);

/// values[i] = op(xs[i]). If any evaluation throws, the exception of the
/// lowest failing index is rethrown after the loop.
std::vector<double> evaluate_on_grid(const std::function<double(double)>& op,
                                     std::span<const double> xs,
                                     Execution execution = Execution::parallel);

/// Number of OpenMP threads the parallel kernels will use.
int parallel_thread_count();

}  // namespace pqapprox
