#include "volterra/serialize.hpp"

namespace volterra {

nlohmann::json series_to_json(const TruncatedSeries& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Cplx& c : f.coeffs()) {
        coeffs.push_back({c.real(), c.imag()});
    }
    return {{"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw std::invalid_argument("series JSON needs a \"coeffs\" array");
    }
    std::vector<Cplx> coeffs;
    for (const auto& pair : j["coeffs"]) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument(
                "series JSON coefficients must be [re, im] pairs");
        }
        coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return TruncatedSeries(std::move(coeffs));
}

nlohmann::json spectrum_to_json(const SpectrumResult& r) {
    nlohmann::json j{{"shape", to_string(r.shape)},
                     {"point_spectrum", "empty"},
                     {"space", r.space_tag},
                     {"witness", r.witness}};
    if (r.shape == SpectrumShape::ClosedDisk) j["radius"] = r.radius;
    return j;
}

nlohmann::json norm_estimate_to_json(const NormEstimate& e) {
    return {{"value", e.value},
            {"attained_r", e.attained_r},
            {"verdict", e.verdict == NormVerdict::Bounded
                            ? "Bounded"
                            : "DivergenceSuspected"},
            {"r_max", e.r_max},
            {"grid_points", e.grid_points}};
}

}  // namespace volterra
