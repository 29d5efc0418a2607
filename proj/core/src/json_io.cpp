#include "specht/json_io.hpp"

#include <json.hpp>

namespace specht {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parts_array(const Partition& mu) {
    ordered_json arr = ordered_json::array();
    for (int part : mu.parts())
        arr.push_back(part);
    return arr;
}

ordered_json block_object(const BlockInfo& block) {
    ordered_json obj;
    obj["core"] = parts_array(block.p_core);
    obj["weight"] = block.weight;
    obj["defect"] = block.defect_group;
    obj["abelian_defect"] = block.abelian_defect;
    return obj;
}

}  // namespace

std::string to_json(const Partition& mu) {
    return parts_array(mu).dump();
}

std::string to_json(const Partition& mu, const BlockInfo& block) {
    ordered_json obj;
    obj["mu"] = parts_array(mu);
    obj["p"] = block.p;
    ordered_json inner = block_object(block);
    for (auto& [key, value] : inner.items())
        obj[key] = value;
    return obj.dump();
}

std::string to_json(const VertexReport& report) {
    ordered_json obj;
    obj["mu"] = parts_array(report.mu);
    obj["p"] = report.p;
    obj["status"] = status_name(report.status);
    obj["vertex"] = report.vertex;
    obj["complexity"] = {{"lo", report.complexity.lo}, {"hi", report.complexity.hi}};
    obj["block"] = block_object(report.block);
    obj["trivial_source"] = report.trivial_source;
    obj["simple_young"] = report.simple_young;
    obj["note"] = report.note;
    if (report.status == VertexStatus::AbelianFeasibleButUndetermined) {
        ordered_json types = ordered_json::array();
        for (const auto& type : report.feasible_types) {
            ordered_json exps = ordered_json::array();
            for (int e : type.exponents)
                exps.push_back(e);
            types.push_back(exps);
        }
        obj["feasible_types"] = types;
    }
    obj["citations"] = report.citations;
    return obj.dump();
}

}  // namespace specht
