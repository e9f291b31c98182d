#include "tilelab/json_io.hpp"

namespace tilelab {

Json to_json(const TilingCertificate& cert) {
    Json copies = Json::array();
    for (const auto& copy : cert.copies) {
        Json embedding = Json::object();
        for (size_t i = 0; i < copy.embedding.size(); ++i)
            embedding[std::to_string(i)] = copy.embedding[i];
        copies.push_back(Json{{"vertices", copy.vertices},
                              {"embedding", std::move(embedding)}});
    }
    return Json{{"copies", std::move(copies)}, {"covered", cert.covered}};
}

Json to_json(const ConstructionCertificate& cert) {
    return Json{{"set_a", cert.set_a},
                {"set_b", cert.set_b},
                {"claimed_min_codegree", cert.claimed_min_codegree},
                {"freeness_claims", cert.freeness_claims},
                {"notes", cert.notes}};
}

Json to_json(const InvariantReport& report) {
    Json j;
    j["sigma"] = report.sigma.str();
    if (report.gcd_f.has_value())
        j["gcd"] = *report.gcd_f;
    else
        j["gcd"] = nullptr;
    j["tau"] = report.tau;
    j["s_set"] = report.s_set;
    j["d_set"] = report.d_set;
    return j;
}

Json to_json(const ThresholdReport& report) {
    Json j;
    j["value"] = report.value.str();
    switch (report.case_tag) {
        case ThresholdCase::half_n: j["case"] = "half-n"; break;
        case ThresholdCase::sigma_n: j["case"] = "sigma-n"; break;
        case ThresholdCase::max_sigma_p: j["case"] = "max-sigma-prime"; break;
    }
    j["error_term"] = "o(n)";
    j["s_set"] = report.s_set;
    j["gcd_s"] = report.gcd_s;
    if (report.gcd_f.has_value())
        j["gcd"] = *report.gcd_f;
    else
        j["gcd"] = nullptr;
    if (report.smallest_prime.has_value()) j["p"] = *report.smallest_prime;
    j["sigma"] = report.sigma.str();
    return j;
}

Json to_json(const FractionalTiling& h) {
    Json entries = Json::array();
    for (const auto& [key, w] : h.weights)
        entries.push_back(Json{{"vertex", key.first},
                               {"edge", key.second},
                               {"weight", w.str()}});
    Json labelings = Json::array();
    for (const auto& [e, order] : h.labelings)
        labelings.push_back(Json{{"edge", e}, {"order", order}});
    return Json{{"entries", std::move(entries)},
                {"labelings", std::move(labelings)}};
}

Json to_json(const FractionalReport& report) {
    Json j;
    j["valid"] = report.valid;
    j["weight"] = report.weight.str();
    if (report.h_min.has_value())
        j["h_min"] = report.h_min->str();
    else
        j["h_min"] = "infinity";
    if (!report.valid) j["reason"] = report.reason;
    return j;
}

FractionalTiling fractional_from_json(const Json& j) {
    FractionalTiling h;
    try {
        for (const auto& entry : j.at("entries")) {
            Vertex v = entry.at("vertex").get<Vertex>();
            int e = entry.at("edge").get<int>();
            h.weights[{v, e}] = Rat::parse(entry.at("weight").get<std::string>());
        }
        if (j.contains("labelings"))
            for (const auto& lab : j.at("labelings"))
                h.labelings[lab.at("edge").get<int>()] =
                    lab.at("order").get<std::vector<Vertex>>();
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse, std::string("bad fractional tiling JSON: ") +
                                   e.what());
    }
    return h;
}

}  // namespace tilelab
