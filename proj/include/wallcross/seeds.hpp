#ifndef WALLCROSS_SEEDS_HPP
#define WALLCROSS_SEEDS_HPP

#include "scattering.hpp"

namespace wallcross
{

// Line wall through the origin along `mode` with log factor f (x) d_{rotate90(mode)} and
// coorientation -rotate90(mode). f must only contain monomials -k * mode.
Wall seed_wall(const LatticeVector &mode, const Series &f);

// Two-line standard diagram from the two seed functions (wall i should use only t_i).
Diagram standard_seed(const LatticeVector &m1, const Series &f1, const LatticeVector &m2, const Series &f2);

// Modes e1, e2 and factors exponent * log(1 + t_i w^{-e_i}) (exponent 2: the classic
// example with infinitely many walls; exponent 1: the pentagon).
Diagram log_seed(int exponent, int max_order);

} // namespace wallcross

#endif
