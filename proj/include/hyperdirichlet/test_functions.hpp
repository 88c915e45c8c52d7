#pragma once

#include <string>
#include <vector>

#include "hyperdirichlet/transform.hpp"

namespace hyperdirichlet {

/// 1 - chi / a.
RadialFunction linear_ramp(double a);
/// exp(1 - 1 / (1 - (chi/a)^2)); C-infinity, value 1 at the origin.
RadialFunction bump(double a);
/// chi^2 (a - chi).
RadialFunction poly_vanish(double a);
/// (1 - chi/a)^2 plus 1 - (2 chi / a - 1)^2 on [a/2, a): a unit jump at a/2
/// with continuous first derivative there, f(a-) = 0.
RadialFunction one_jump(double a);

/// e^{-(y-1)} on [1, inf).
HalfLineFunction exp_decay();
/// (y-1) e^{-(y-1)}.
HalfLineFunction exp_decay_vanishing();

/// Radial profiles by name: linear-ramp, bump, poly-vanish, one-jump.
/// Unknown names throw std::invalid_argument.
RadialFunction radial_by_name(const std::string& name, double a);
/// Half-line functions by name: exp-decay, exp-decay-vanishing.
HalfLineFunction half_line_by_name(const std::string& name);

std::vector<std::string> radial_names();
std::vector<std::string> half_line_names();

}  // namespace hyperdirichlet
