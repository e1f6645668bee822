#pragma once

#include <vector>

#include "torix/divisors.hpp"
#include "torix/fan.hpp"

namespace torix {

struct WallDegree {
    Wall wall;
    Rational value;
};

/// Degree of a Q-Cartier divisor on the invariant curve V(tau) of a wall.
/// Throws InputError when D is not Q-Cartier or the fan is not complete.
Rational wall_curve_degree(const Fan& fan, const QDivisor& d, const Wall& wall);

/// Degrees on every wall, in the order of walls(fan).
std::vector<WallDegree> wall_degrees(const Fan& fan, const QDivisor& d);

/// Minimum over all walls with a minimizing wall (the first one in wall order).
WallDegree min_curve_degree(const Fan& fan, const QDivisor& d);

/// Primitive generators of tau-perp in M; their rows realize N -> N / N_tau.
IntMatrix quotient_projection(const Fan& fan, const Cone& tau);

/// True when every maximal cone of `fine` lies in some maximal cone of `coarse`.
bool is_refinement(const Fan& fine, const Fan& coarse);

/// Divisor on `fine` with the same support function: a_rho = -psi_D(v_rho).
QDivisor pullback(const Fan& coarse, const QDivisor& d, const Fan& fine);

struct Restriction {
    StarFan star;
    QDivisor divisor; // on star.fan
};

/// Restriction of a Q-Cartier divisor to the orbit closure V(tau), after
/// shifting by div(chi^{u_sigma}) for the first maximal cone sigma over tau.
Restriction restrict_to_orbit(const Fan& fan, const QDivisor& d, const Cone& tau);

/// Restriction to the prime divisor D_j on a smooth fan.
Restriction restrict_to_divisor(const Fan& fan, const QDivisor& d, std::size_t j);

} // namespace torix
