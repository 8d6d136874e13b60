#include "sgf/spectral/constructions.hpp"

#include "sgf/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sgf {

std::vector<int> cantor_index_set(const std::vector<int>& s, int depth) {
  if (depth < 0 || depth > 50) throw DomainError("cantor depth overflow (must be <= 50)");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1) throw DomainError("s_sequence entries must be positive");
    if (i > 0 && s[i] <= s[i - 1]) throw DomainError("s_sequence must be strictly increasing");
  }
  std::vector<int> J;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    int hi = i + 1 < s.size() ? s[i + 1] : depth;
    for (int j = s[i]; j <= std::min(hi, depth); ++j) J.push_back(j);
  }
  return J;
}

SpectralMeasure cantor_measure_from_index_set(std::vector<int> J, int depth, const CantorOptions& opt) {
  if (depth < 0 || depth > 50) throw DomainError("cantor depth overflow (must be <= 50)");
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  if (!J.empty() && J.front() < 1) throw DomainError("cantor index set must contain positive integers");
  CantorRecipe rec;
  rec.J = J;
  rec.depth = depth;
  rec.weight = 0.5;
  rec.intervals();  // enumeration bound check
  SpectralMeasure mu(1);
  if (opt.include_riesz) {
    mu = riesz_measure(opt.alpha, 1, {opt.riesz_step, 1.0}).with_closed_form(std::nullopt);
  }
  std::ostringstream name;
  name << "cantor(depth=" << depth << ",J={";
  for (std::size_t i = 0; i < J.size(); ++i) name << (i ? "," : "") << J[i];
  name << "}";
  if (opt.include_riesz) name << ",alpha=" << opt.alpha;
  name << ")";
  return mu.with_cantor(rec).with_recipe(name.str());
}

SpectralMeasure cantor_measure(const std::vector<int>& s_sequence, int depth, const CantorOptions& opt) {
  return cantor_measure_from_index_set(cantor_index_set(s_sequence, depth), depth, opt);
}

IrregularMeasure irregular_measure(double alpha, double epsilon, const std::vector<int>& ratios,
                                   const TruncationPair& tp) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("irregular measure needs alpha in (0, 1)");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("irregular measure needs epsilon in (0, 1)");
  if (tp.dim() != 1) throw DomainError("irregular measure is one-dimensional");
  for (int r : ratios)
    if (r < 3 || r % 2 == 0) throw ConstructionError("scale ratios must be odd integers >= 3");

  IrregularMeasure out;
  out.epsilon = epsilon;
  out.scales.push_back(1.0);
  for (int r : ratios) out.scales.push_back(out.scales.back() * r);

  struct Raw {
    double freq, mass;
  };
  std::vector<Raw> raw{{1.0, 0.5}, {-1.0, 0.5}};
  out.level_mass.push_back(1.0);
  for (std::size_t i = 1; i < out.scales.size(); ++i) {
    const double Ti = out.scales[i], Tprev = out.scales[i - 1];
    double level = 0.0;
    for (long k = 1;; k += 2) {
      double lam = k / Ti;
      double phi = tp.zeta(Tprev * lam / epsilon);
      if (phi < 1e-12) break;
      double w = std::pow(Ti, -alpha) * std::pow(double(k), alpha - 1.0) * phi;
      raw.push_back({lam, w});
      raw.push_back({-lam, w});
      level += 2.0 * w;
    }
    out.level_mass.push_back(level);
  }
  for (double m : out.level_mass) out.normalizer += m;
  std::vector<Atom> atoms;
  for (const auto& r : raw) atoms.push_back({{r.freq}, r.mass / out.normalizer});
  SpectralMeasure mu = SpectralMeasure(1).with_atoms(std::move(atoms));
  std::ostringstream name;
  name << "irregular(alpha=" << alpha << ",eps=" << epsilon << ",scales=";
  for (std::size_t i = 0; i < out.scales.size(); ++i) name << (i ? ":" : "") << out.scales[i];
  name << ")";
  out.measure = mu.with_recipe(name.str());
  return out;
}

IrregularMeasure irregular_measure(double alpha, double epsilon, const std::vector<int>& ratios) {
  return irregular_measure(alpha, epsilon, ratios, build_truncation(0.5));
}

}  // namespace sgf
