#pragma once

#include <json.hpp>
#include <string>

#include "tough/harness.hpp"
#include "tough/reductions.hpp"
#include "tough/solver.hpp"

namespace tough {

// wire formats:
//   Witness         {"cutset":[ints],"components":int,"ratio":"a/b"}
//   ToughnessValue  {"kind":"zero|finite|infinite","value":"a/b"?,"tough_set":[ints]?}
//   LabelMap        {"name":index,...}
//   CheckReport     one object per check, suitable for JSON-lines output

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j, int universe_size);

nlohmann::json toughness_to_json(const ToughnessValue& v);
nlohmann::json labels_to_json(const LabelMap& m);
nlohmann::json report_to_json(const CheckReport& r);

}  // namespace tough
