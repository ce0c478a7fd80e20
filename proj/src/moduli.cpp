#include "pqapprox/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pqapprox/errors.hpp"

namespace pqapprox {

namespace {

constexpr double kSkip = -1.0;

struct StepLattice {
  int grid = 0;
  int steps = 0;          // lattice steps j/grid, j = 1..steps
  double fallback = 0.0;  // used when steps == 0

  int count() const { return steps > 0 ? steps : 1; }
  double step(int j) const { return steps > 0 ? static_cast<double>(j) / grid : fallback; }
};

StepLattice make_lattice(const FunctionSpec& f, double delta, int grid_size, const char* what) {
  if (grid_size < kMinModulusGrid) {
    std::ostringstream os;
    os << what << ": grid_size must be at least " << kMinModulusGrid << ", got " << grid_size;
    throw DomainError(os.str());
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw DomainError(std::string(what) + ": delta must be positive and finite");
  }
  f.require_domain({0.0, 1.0}, what);
  const double scaled = std::floor(delta * grid_size * (1.0 + 1e-12));
  const int steps = static_cast<int>(std::min<double>(scaled, grid_size));
  return {grid_size, steps, delta};
}

// Largest kernel value over lattice points x = i/grid and steps j. The kernel
// receives the lattice index j (1-based; 0 for the fallback step) alongside h.
template <class Kernel>
double lattice_sup(const StepLattice& lattice, Execution execution, Kernel kernel) {
  const int count = lattice.count();
  const int grid = lattice.grid;
  const auto step_sup = [&](int idx) {
    const int j = lattice.steps > 0 ? idx + 1 : 0;
    const double h = lattice.step(j);
    double best = 0.0;
    for (int i = 0; i <= grid; ++i) best = std::max(best, kernel(i, j, h));
    return best;
  };

  double best = 0.0;
  if (execution == Execution::serial) {
    for (int idx = 0; idx < count; ++idx) best = std::max(best, step_sup(idx));
    return best;
  }
#pragma omp parallel for schedule(dynamic) reduction(max : best)
  for (int idx = 0; idx < count; ++idx) best = std::max(best, step_sup(idx));
  return best;
}

// x + m*h as a lattice point when possible, so that the right end is exactly 1.
double shifted(int i, int m, int j, double h, int grid) {
  if (j > 0) return static_cast<double>(i + m * j) / grid;
  return static_cast<double>(i) / grid + m * h;
}

}  // namespace

double empirical_modulus(const FunctionSpec& f, double delta, int grid_size,
                         Execution execution) {
  const StepLattice lattice = make_lattice(f, delta, grid_size, "empirical_modulus");
  return lattice_sup(lattice, execution, [&](int i, int j, double h) {
    const double right = shifted(i, 1, j, h, grid_size);
    if (j > 0 ? i + j > grid_size : right > 1.0) return kSkip;
    const double x = static_cast<double>(i) / grid_size;
    return std::fabs(f.evaluate_unchecked(right) - f.evaluate_unchecked(x));
  });
}

double empirical_second_modulus(const FunctionSpec& f, double step, int grid_size,
                                SecondDifference form, Execution execution) {
  if (form == SecondDifference::literal) {
    return empirical_modulus(f, step, grid_size, execution);
  }
  const StepLattice lattice = make_lattice(f, step, grid_size, "empirical_second_modulus");
  return lattice_sup(lattice, execution, [&](int i, int j, double h) {
    const double far = shifted(i, 2, j, h, grid_size);
    if (j > 0 ? i + 2 * j > grid_size : far > 1.0) return kSkip;
    const double x = static_cast<double>(i) / grid_size;
    const double mid = shifted(i, 1, j, h, grid_size);
    return std::fabs(f.evaluate_unchecked(far) - 2.0 * f.evaluate_unchecked(mid) +
                     f.evaluate_unchecked(x));
  });
}

double ditzian_totik_second_modulus(const FunctionSpec& f, double step, int grid_size,
                                    Execution execution) {
  const StepLattice lattice = make_lattice(f, step, grid_size, "ditzian_totik_second_modulus");
  return lattice_sup(lattice, execution, [&](int i, int, double h) {
    const double x = static_cast<double>(i) / grid_size;
    const double offset = h * std::sqrt(x * (1.0 - x));
    if (x - offset < 0.0 || x + offset > 1.0) return kSkip;
    return std::fabs(f.evaluate_unchecked(x + offset) - 2.0 * f.evaluate_unchecked(x) +
                     f.evaluate_unchecked(x - offset));
  });
}

double ditzian_totik_first_modulus(const FunctionSpec& f, double delta, int grid_size,
                                   Execution execution) {
  const StepLattice lattice = make_lattice(f, delta, grid_size, "ditzian_totik_first_modulus");
  return lattice_sup(lattice, execution, [&](int i, int, double h) {
    const double x = static_cast<double>(i) / grid_size;
    const double offset = h * x;
    if (x - offset < 0.0 || x + offset > 1.0) return kSkip;
    return std::fabs(f.evaluate_unchecked(x + offset) - f.evaluate_unchecked(x));
  });
}

}  // namespace pqapprox
