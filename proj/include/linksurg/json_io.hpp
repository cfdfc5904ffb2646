#pragma once

#include <string>

#include "json.hpp"
#include "linksurg/bimodule.hpp"
#include "linksurg/typed.hpp"

namespace linksurg {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const R0Elt&);
json to_json(const R1Elt&);
json to_json(const KElt&);
json to_json(const GradingVector&);
json to_json(const DDModule&);
json to_json(const TypeDModule&);
json to_json(const HFunction&);

R0Elt r0_from_json(const json&);
R1Elt r1_from_json(const json&);
KElt kelt_from_json(const json&);
GradingVector grading_from_json(const json&);
DDModule dd_from_json(const json&);
TypeDModule typed_from_json(const json&);
HFunction hfunction_from_json(const json&);

// Module files are tagged {"type": "dd"} or {"type": "d"}.
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

std::string export_dot(const DDModule&);
std::string export_dot(const TypeDModule&);

}  // namespace linksurg
