#pragma once

#include <json.hpp>

#include "volterra/series.hpp"
#include "volterra/spectra.hpp"
#include "volterra/weights.hpp"

namespace volterra {

/// Series JSON: {"coeffs": [[re, im], ...]}, degree 0 upward.
nlohmann::json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// {"shape":"zero"|"disk"|"plane","radius":...,"point_spectrum":"empty",
///  "space":...,"witness":...}
nlohmann::json spectrum_to_json(const SpectrumResult& r);

nlohmann::json norm_estimate_to_json(const NormEstimate& e);

}  // namespace volterra
