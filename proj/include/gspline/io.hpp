#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gspline/iso.hpp"
#include "gspline/spline.hpp"
#include "json.hpp"

namespace gspline::io {

using Json = nlohmann::ordered_json;

/// Parse errors carry the source name and the line/column or field at fault.
Json parse_json(std::string_view text, std::string_view source);
Json read_json_file(const std::filesystem::path& path);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// "Z", "Z/6", "Z/6Z", "Z[x]" (any single-letter variable).
RingDescriptor parse_ring(std::string_view text);

Json ring_to_json(const RingDescriptor& ring);
/// Object form {"kind": ...} or the short text form of parse_ring.
RingDescriptor ring_from_json(const Json& j, std::string_view field = "ring");

/// Integers as numbers, polynomials as ascending coefficient arrays.
Json value_to_json(const RingValue& v);
/// Also accepts decimal strings for integers and polynomial text for Z[x].
RingValue value_from_json(const RingDescriptor& ring, const Json& j, std::string_view field);

Json graph_to_json(const EdgeLabeledGraph& g);
EdgeLabeledGraph graph_from_json(const Json& j);

/// `graph_ref` is written as the "graph" entry when given; the graph is
/// inlined otherwise.
Json spline_to_json(const Spline& s, const std::optional<std::string>& graph_ref = std::nullopt);
/// A string "graph" entry is a file path relative to `base_dir`.
Spline spline_from_json(const Json& j, const std::filesystem::path& base_dir = {});

Json iso_to_json(const LabeledIso& iso, const EdgeLabeledGraph& source, const EdgeLabeledGraph& target);
LabeledIso iso_from_json(const Json& j, const EdgeLabeledGraph& source, const EdgeLabeledGraph& target);

EdgeLabeledGraph read_graph_file(const std::filesystem::path& path);
Spline read_spline_file(const std::filesystem::path& path);
LabeledIso read_iso_file(const std::filesystem::path& path, const EdgeLabeledGraph& source,
                         const EdgeLabeledGraph& target);

}  // namespace gspline::io
