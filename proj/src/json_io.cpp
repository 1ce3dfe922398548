#include "tough/json_io.hpp"

#include <stdexcept>

namespace tough {

using nlohmann::json;

json witness_to_json(const Witness& w) {
    return json{{"cutset", w.cutset.to_indices()},
                {"components", w.component_count},
                {"ratio", w.ratio.fraction_str()}};
}

Witness witness_from_json(const json& j, int universe_size) {
    Witness w;
    w.cutset = VertexSet(universe_size);
    for (const auto& v : j.at("cutset")) {
        int idx = v.get<int>();
        if (idx < 0 || idx >= universe_size)
            throw std::invalid_argument("witness cutset index out of range");
        w.cutset.set(idx);
    }
    w.component_count = j.at("components").get<int>();
    w.ratio = parse_rational(j.at("ratio").get<std::string>());
    return w;
}

json toughness_to_json(const ToughnessValue& v) {
    switch (v.kind) {
        case ToughnessValue::Kind::Zero: return json{{"kind", "zero"}};
        case ToughnessValue::Kind::Infinite: return json{{"kind", "infinite"}};
        case ToughnessValue::Kind::Finite:
            return json{{"kind", "finite"},
                        {"value", v.value->fraction_str()},
                        {"tough_set", v.tough_set->to_indices()}};
    }
    throw std::logic_error("unreachable");
}

json labels_to_json(const LabelMap& m) {
    json j = json::object();
    for (const auto& [name, idx] : m) j[name] = idx;
    return j;
}

json report_to_json(const CheckReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back(json{{"graph6", f.graph6}, {"detail", f.detail}});
    json j{{"check_id", r.check_id},
           {"corpus_size", r.corpus_size},
           {"failures", fails},
           {"elapsed_seconds", r.elapsed_seconds},
           {"pass", r.passed()},
           {"notes", r.notes}};
    switch (r.mode) {
        case CheckReport::Mode::Exhaustive: j["mode"] = "exhaustive"; break;
        case CheckReport::Mode::Sampled: j["mode"] = "sampled"; break;
        case CheckReport::Mode::Heuristic: j["mode"] = "heuristic"; break;
    }
    if (r.mode != CheckReport::Mode::Exhaustive) {
        j["seed"] = r.seed;
        j["sample_count"] = r.sample_count;
    }
    if (r.max_item_seconds > 0) j["max_item_seconds"] = r.max_item_seconds;
    return j;
}

}  // namespace tough
