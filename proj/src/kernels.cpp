#include "pqapprox/kernels.hpp"

#include <exception>

#include <omp.h>

#include "pqapprox/errors.hpp"

namespace pqapprox {

std::vector<double> uniform_grid(double start, double end, int points) {
  if (points < 2) throw DomainError("uniform_grid: need at least 2 points");
  if (!(start < end)) throw DomainError("uniform_grid: start must be below end");
  std::vector<double> xs(static_cast<std::size_t>(points));
  const double span = end - start;
  for (int i = 0; i < points; ++i) xs[i] = start + span * i / (points - 1);
  xs.back() = end;
  return xs;
}

void parallel_for(std::ptrdiff_t count, const std::function<void(std::ptrdiff_t)>& body,
                  Execution execution) {
  if (execution == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count > 0 ? count : 0));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<double> evaluate_on_grid(const std::function<double(double)>& op,
                                     std::span<const double> xs, Execution execution) {
  std::vector<double> values(xs.size(), 0.0);
  parallel_for(
      static_cast<std::ptrdiff_t>(xs.size()), [&](std::ptrdiff_t i) { values[i] = op(xs[i]); },
      execution);
  return values;
}

int parallel_thread_count() { return omp_get_max_threads(); }

}  // namespace pqapprox
