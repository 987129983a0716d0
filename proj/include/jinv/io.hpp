#pragma once

// JSON (de)serialization for every on-disk value: exact scalars print as
// rational strings "p/q" ("/q" omitted when q == 1), Gaussian rationals as
// {"re": ..., "im": ...} (emitted as a bare string when the imaginary part
// vanishes), composition-algebra elements as coefficient arrays, Hermitian
// elements as {"algebra", "diag", "p", "q", "r"}.

#include <string>
#include <vector>

#include <json.hpp>

#include "jinv/jordan.hpp"
#include "jinv/models.hpp"
#include "jinv/realize.hpp"

namespace jinv {

using json = nlohmann::ordered_json;

json to_json(const GaussRat& v);
GaussRat gauss_from_json(const json& j);

json to_json(const CompQ& u);
CompQ comp_from_json(const json& j);  // algebra inferred from the array length

json to_json(const HermQ& x);
HermQ herm_from_json(const json& j);

json to_json(const Mat3<GaussRat>& m);
Mat3<GaussRat> mat3_from_json(const json& j);

// Uniform-algebra tuples; mixed tags raise SchemaError.
json tuple_to_json(const std::vector<HermQ>& t);
std::vector<HermQ> tuple_from_json(const json& j);

json word_to_json(const GroupWord& w);
GroupWord word_from_json(const json& j, AlgebraId model);

json to_json(const RealizationResult& r);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace jinv
