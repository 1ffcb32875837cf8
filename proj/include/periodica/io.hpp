#ifndef PERIODICA_IO_HPP_
#define PERIODICA_IO_HPP_

#include <json.hpp>
#include <string>

#include "periodica/magma.hpp"
#include "periodica/real_set.hpp"
#include "periodica/subset.hpp"

namespace periodica {

// {"n": 4, "table": [[...], ...], "labels": [...]} where labels are optional.
FiniteMagma magma_from_json(const nlohmann::json& j);
FiniteMagma magma_from_file(const std::string& path);
nlohmann::json magma_to_json(const FiniteMagma& x);

// "[0,2,4]" (indices or labels) or a hex bit word "0x15".
Subset parse_subset(const FiniteMagma& x, const std::string& text);
Element parse_element(const FiniteMagma& x, const std::string& text);

namespace real {

// {"q": "p/q", "roots": {"2": "p/q"}}, a "p/q" string or a JSON integer.
ExactReal number_from_json(const nlohmann::json& j);
nlohmann::json number_to_json(const ExactReal& v);
// {"point": num} or {"lo", "hi", "lo_closed", "hi_closed"}.
Cell cell_from_json(const nlohmann::json& j);
nlohmann::json cell_to_json(const Cell& c);
// {"D": [cells], "E": [cells], "mirrored": bool}
UnitPeriodicRealSet set_from_json(const nlohmann::json& j);
nlohmann::json set_to_json(const UnitPeriodicRealSet& a);
UnitPeriodicRealSet set_from_text(const std::string& text);

}  // namespace real

}  // namespace periodica

#endif  // PERIODICA_IO_HPP_
