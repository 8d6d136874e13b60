#pragma once

#include "sgf/capacity/solver.hpp"

#include <iosfwd>
#include <string>

namespace sgf {

// Columns: x_1..x_d, nu, h.
void write_solution_csv(std::ostream& os, const EquilibriumSolution& sol);
// {"capacity", "energy", "gap", "iterations", "converged", "infinite_capacity", "min_potential", "points"}
std::string solution_json(const EquilibriumSolution& sol);

}  // namespace sgf
