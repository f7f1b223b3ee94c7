#pragma once

#include "qmdt/corr.hpp"
#include "qmdt/mdt.hpp"
#include "qmdt/profile.hpp"

#include <json.hpp>

namespace qmdt {

using nlohmann::json;

// Parsing validates through the module constructors and throws qmdt::Error
// (ParseError for malformed shapes).
json toJson(const Profile& p);
Profile profileFromJson(const json& j);

// Support is a list of tuples of {"kind": "H"|"L", "i": n}, or cycle text such as "h0*l1".
json toJson(const Cycle& c);
Cycle cycleFromJson(const json& j);

// {"cycle": {...}, "split": k}; a bare cycle on two factors is read with split 1.
json toJson(const Corr& f);
Corr corrFromJson(const json& j);

json toJson(const MdtPartition& p);
MdtPartition partitionFromJson(const json& j);

json toJson(const std::vector<Violation>& v);
json toJson(const std::vector<ExcellentPair>& pairs);

} // namespace qmdt
