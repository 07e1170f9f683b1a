#include <json.hpp>

#include "cycsch/cyclotomic.hpp"

namespace cycsch {

std::string verdict_to_json(const NormalityVerdict& v) {
    nlohmann::json j;
    j["ring"] = v.ring_spec;
    j["K"] = v.k_elements;
    j["rank"] = v.rank;
    j["pure"] = v.pure ? nlohmann::json(*v.pure) : nlohmann::json(nullptr);
    j["strongly_pure"] =
        v.strongly_pure ? nlohmann::json(*v.strongly_pure) : nlohmann::json(nullptr);
    j["theorem"] = to_string(v.theorem);
    j["bruteforce"] = to_string(v.bruteforce);
    j["aut_order"] = v.aut_order ? nlohmann::json(*v.aut_order) : nlohmann::json(nullptr);
    j["agammal_order"] = v.agammal_order;
    j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
    j["consistent"] = v.consistent;
    return j.dump();
}

std::string verdict_to_csv_row(const NormalityVerdict& v) {
    auto opt_bool = [](const std::optional<bool>& b) {
        return b ? (*b ? std::string("true") : std::string("false")) : std::string();
    };
    std::string kstr;
    for (std::size_t i = 0; i < v.k_elements.size(); ++i) {
        if (i) kstr += " ";
        kstr += std::to_string(v.k_elements[i]);
    }
    std::string row = "\"" + v.ring_spec + "\",\"" + kstr + "\"," + std::to_string(v.rank) + "," +
                      opt_bool(v.pure) + "," + opt_bool(v.strongly_pure) + "," +
                      to_string(v.theorem) + "," + to_string(v.bruteforce) + "," +
                      (v.aut_order ? *v.aut_order : std::string()) + "," +
                      std::to_string(v.agammal_order) + "," + (v.consistent ? "true" : "false");
    return row;
}

}  // namespace cycsch
