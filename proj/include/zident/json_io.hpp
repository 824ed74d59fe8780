#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zident/discovery.hpp"
#include "zident/gl.hpp"
#include "zident/holonomic.hpp"
#include "zident/series.hpp"
#include "zident/words.hpp"

namespace zident {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "zident/1";

Json series_to_json(const SeriesSpec& spec);
SeriesSpec series_from_json(const Json& j);

/// A series/right-hand-side pair, e.g. a proven or conjectured evaluation.
struct Identity {
    std::string name;
    SeriesSpec series;
    ExprPtr rhs;
};

Json identity_to_json(const Identity& id);
Identity identity_from_json(const Json& j);

Json basis_to_json(const std::vector<BasisEntry>& basis);
std::vector<BasisEntry> basis_from_json(const Json& j);

Json recurrence_to_json(const Recurrence& rec);
Recurrence recurrence_from_json(const Json& j);

Json diffop_to_json(const DiffOp& op);
DiffOp diffop_from_json(const Json& j);

Json glcombo_to_json(const GlCombo& c);
GlCombo glcombo_from_json(const Json& j);

Json wordsum_to_json(const WordSum& s);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace zident
