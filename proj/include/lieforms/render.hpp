#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieforms/classifier.hpp"
#include "lieforms/weyl.hpp"

namespace lieforms {

// All emitters are deterministic: a fixed input yields byte-identical
// output, and the JSON forms round-trip through ordered parsing.
using Json = nlohmann::ordered_json;

/// "1 0" for the coordinate vector of a root.
std::string coords_str(const Root& r);

/// One row per unordered summable pair {a, b}, written as the (a, b) with
/// a before b in the root order and sorted by (a, b).
std::vector<std::array<int, 3>> constant_rows(const StructureConstants& sc);

Json json_roots(const RootSystem& rs);
Json json_weyl(const RootSystem& rs, const WeylElement& w, const DiagramAutomorphism& mw0);
Json json_constants(const StructureConstants& sc);
Json json_certificate(const Certificate& cert);
Json json_record(const ClassificationRecord& rec);
Json json_records(const std::vector<ClassificationRecord>& recs);

std::string table_roots(const RootSystem& rs);
std::string table_weyl(const RootSystem& rs, const WeylElement& w, const DiagramAutomorphism& mw0);
std::string table_constants(const StructureConstants& sc);
std::string table_certificate(const Certificate& cert);
std::string table_records(const std::vector<ClassificationRecord>& recs);

std::string csv_roots(const RootSystem& rs);
std::string csv_weyl(const RootSystem& rs, const WeylElement& w, const DiagramAutomorphism& mw0);
std::string csv_constants(const StructureConstants& sc);
std::string csv_certificate(const Certificate& cert);
std::string csv_records(const std::vector<ClassificationRecord>& recs);

/// Canonical serialization used for every JSON emitter: two-space indent
/// plus a trailing newline.
std::string dump(const Json& j);

} // namespace lieforms
