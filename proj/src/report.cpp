#include "bicomb/report.hpp"

namespace bicomb {

nlohmann::json to_json(const PropertyReport& report)
{
    nlohmann::json j;
    j["property"] = std::string(to_string(report.property));
    j["bicombing"] = report.bicombing;
    j["passed"] = report.passed;
    j["worst_violation"] = report.worst_violation;
    j["tolerance"] = report.tol;
    j["samples"] = report.samples_evaluated;
    j["seed"] = report.seed;
    if (report.witness) {
        const Witness& w = *report.witness;
        j["witness"] = {{"points", w.points},
                        {"param_names", w.param_names},
                        {"params", w.params},
                        {"violation", w.violation}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

PropertyReport report_from_json(const nlohmann::json& j)
{
    PropertyReport r;
    r.property = property_from_string(j.at("property").get<std::string>());
    r.bicombing = j.at("bicombing").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    r.worst_violation = j.at("worst_violation").get<double>();
    r.tol = j.at("tolerance").get<double>();
    r.samples_evaluated = j.at("samples").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (const auto& w = j.at("witness"); !w.is_null()) {
        Witness witness;
        witness.points = w.at("points").get<std::vector<std::vector<double>>>();
        witness.param_names = w.at("param_names").get<std::vector<std::string>>();
        witness.params = w.at("params").get<std::vector<double>>();
        witness.violation = w.at("violation").get<double>();
        r.witness = std::move(witness);
    }
    return r;
}

}  // namespace bicomb
