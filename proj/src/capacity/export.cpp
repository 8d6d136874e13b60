#include "sgf/capacity/export.hpp"

#include <json.hpp>

#include <cmath>
#include <ostream>

namespace sgf {

void write_solution_csv(std::ostream& os, const EquilibriumSolution& sol) {
  const std::size_t d = sol.points.empty() ? 1 : sol.points.front().size();
  for (std::size_t k = 0; k < d; ++k) os << 'x' << (k + 1) << ',';
  os << "nu,h\n";
  os.precision(17);
  for (std::size_t i = 0; i < sol.points.size(); ++i) {
    for (double v : sol.points[i]) os << v << ',';
    os << sol.nu[i] << ',' << sol.potential[i] << '\n';
  }
}

std::string solution_json(const EquilibriumSolution& sol) {
  nlohmann::json j;
  j["capacity"] = std::isfinite(sol.capacity) ? nlohmann::json(sol.capacity) : nlohmann::json("inf");
  j["energy"] = sol.energy;
  j["gap"] = sol.gap;
  j["iterations"] = sol.iterations;
  j["converged"] = sol.converged;
  j["infinite_capacity"] = sol.infinite_capacity;
  j["min_potential"] = std::isfinite(sol.min_potential) ? nlohmann::json(sol.min_potential) : nlohmann::json("inf");
  j["points"] = sol.points.size();
  return j.dump(2);
}

}  // namespace sgf
