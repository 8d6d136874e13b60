#pragma once

#include "sgf/spectral/measure.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace sgf {

constexpr int kMeasureSchemaVersion = 1;

nlohmann::json measure_to_json(const SpectralMeasure& mu);
// Throws DomainError on schema mismatch or malformed content.
SpectralMeasure measure_from_json(const nlohmann::json& j);

// FNV-1a of the canonical JSON text, as 16 hex digits.
std::string spectrum_hash(const SpectralMeasure& mu);

}  // namespace sgf
