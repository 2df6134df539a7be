#pragma once

// JSON verdict reports. Exact values are written as "a/b" strings, never as
// floats, and keys keep insertion order so output is byte-stable.

#include <dtough/blocking.hpp>
#include <dtough/structure.hpp>

#include <json.hpp>

namespace dtough::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Coord& c);
Json to_json(const Point& p);
Json to_json(const Disk& d);
Json to_json(const Edge& e);
Json to_json(const VertexSet& s);
Json to_json(const Matching& m);
Json to_json(const AuditReport& r);
Json to_json(const GeneralPositionViolation& v);

/// n, hull size and edge count.
Json instance_summary(const Triangulation& t);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// Copy without the "timing" member, for comparing runs.
Json without_timing(Json j);

} // namespace dtough::cli
