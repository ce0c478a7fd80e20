#pragma once

// Grid estimates of moduli of continuity on [0, 1].
//
// Steps and points live on the absolute lattice {i / grid_size}: steps are
// h = j / grid_size <= delta and points x = i / grid_size with every sample
// inside [0, 1]. Lattices for a smaller delta are subsets of those for a
// larger one, so each estimate is nondecreasing in delta. When delta is below
// the lattice spacing the single step h = delta is used instead.

#include "pqapprox/function_spec.hpp"
#include "pqapprox/kernels.hpp"

namespace pqapprox {

/// Which difference the second-order modulus maximizes.
///   standard: |f(x+2h) - 2 f(x+h) + f(x)|
///   literal:  |f(x+h) - f(x)|, the displayed (first-difference) formula
enum class SecondDifference { standard, literal };

constexpr int kMinModulusGrid = 64;

/// omega(f, delta) = sup_{0<h<=delta} sup_{x, x+h in [0,1]} |f(x+h) - f(x)|.
double empirical_modulus(const FunctionSpec& f, double delta, int grid_size,
                         Execution execution = Execution::parallel);

/// omega_2(f, step), the step bound being the sqrt(delta) argument.
double empirical_second_modulus(const FunctionSpec& f, double step, int grid_size,
                                SecondDifference form = SecondDifference::standard,
                                Execution execution = Execution::parallel);

/// omega_2^phi(f, step) with phi(x) = sqrt(x(1-x)); points where x +- h phi(x)
/// leaves [0, 1] are skipped.
double ditzian_totik_second_modulus(const FunctionSpec& f, double step, int grid_size,
                                    Execution execution = Execution::parallel);

/// First-order modulus with step weight psi(x) = x.
double ditzian_totik_first_modulus(const FunctionSpec& f, double delta, int grid_size,
                                   Execution execution = Execution::parallel);

}  // namespace pqapprox
