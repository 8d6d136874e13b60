#include "sgf/spectral/serialize.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"

#include <cstdio>

namespace sgf {

using nlohmann::json;

json measure_to_json(const SpectralMeasure& mu) {
  json j;
  j["schema_version"] = kMeasureSchemaVersion;
  j["dimension"] = mu.dim();
  j["lattice"] = mu.lattice();
  j["recipe"] = mu.recipe();
  json atoms = json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"freq", a.freq}, {"mass", a.mass}});
  j["atoms"] = atoms;
  if (mu.density()) {
    const auto& g = *mu.density();
    json d;
    d["step"] = g.step;
    d["cells"] = g.cells;
    d["masses"] = g.masses;
    if (g.power_alpha) d["power_alpha"] = *g.power_alpha;
    j["density"] = d;
  }
  if (mu.cantor()) {
    const auto& c = *mu.cantor();
    j["cantor"] = {{"J", c.J}, {"depth", c.depth}, {"weight", c.weight}};
  }
  if (mu.closed_form()) j["closed_form"] = {{"kind", "riesz"}, {"alpha", mu.closed_form()->alpha}};
  return j;
}

SpectralMeasure measure_from_json(const json& j) {
  try {
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kMeasureSchemaVersion)
      throw DomainError("unsupported measure schema version");
    SpectralMeasure mu(j.at("dimension").get<int>(), j.value("lattice", false));
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) atoms.push_back({a.at("freq").get<Point>(), a.at("mass").get<double>()});
    mu = mu.with_atoms(std::move(atoms));
    if (j.contains("density")) {
      const auto& d = j.at("density");
      DensityGrid g;
      g.step = d.at("step").get<double>();
      g.cells = d.at("cells").get<std::vector<std::vector<long>>>();
      g.masses = d.at("masses").get<std::vector<double>>();
      if (g.cells.size() != g.masses.size()) throw DomainError("density cells and masses differ in length");
      if (d.contains("power_alpha")) g.power_alpha = d.at("power_alpha").get<double>();
      mu = mu.with_density(std::move(g));
    }
    if (j.contains("cantor")) {
      const auto& c = j.at("cantor");
      CantorRecipe r;
      r.J = c.at("J").get<std::vector<int>>();
      r.depth = c.at("depth").get<int>();
      r.weight = c.at("weight").get<double>();
      mu = mu.with_cantor(r);
    }
    if (j.contains("closed_form")) {
      const auto& c = j.at("closed_form");
      if (c.at("kind").get<std::string>() != "riesz") throw DomainError("unknown closed form");
      mu = mu.with_closed_form(ClosedForm{ClosedForm::Kind::riesz, c.at("alpha").get<double>()});
    }
    mu = mu.with_recipe(j.value("recipe", std::string{}));
    mu.validate(1e-9);
    return mu;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed measure json: ") + e.what());
  }
}

std::string spectrum_hash(const SpectralMeasure& mu) {
  std::string text = measure_to_json(mu).dump();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(num::fnv1a(text.data(), text.size())));
  return buf;
}

}  // namespace sgf
