#pragma once

#include "cst/compat.hpp"
#include "cst/drawing.hpp"
#include "cst/errors.hpp"
#include "cst/transforms.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cst {

using Json = nlohmann::ordered_json;

/// Rationals travel as ["numerator", "denominator"] decimal strings.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

/// Throws ParseError on malformed input or unknown fields. The result is not validated.
DrawingData drawing_data_from_json(const Json& j);
Json drawing_to_json(const DrawingData& d);

/// Parses and validates.
Drawing parse_drawing(const std::string& text);
/// Canonical text of a validated drawing: edges sorted, curves oriented.
std::string serialize_drawing(const Drawing& d);

Drawing load_drawing(const std::string& path);
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

/// Trees as vertex pairs, "0-1,1-2". Throws ParseError or UnknownEdge.
EdgeSet parse_tree(const Drawing& d, const std::string& text);
std::string tree_to_string(const Drawing& d, EdgeSet t);
Json tree_to_json(const Drawing& d, EdgeSet t);
EdgeSet tree_from_json(const Drawing& d, const Json& j);

/// 64-bit FNV-1a over the canonical tree strings, as 16 hex digits.
std::string sequence_digest(const Drawing& d, const std::vector<EdgeSet>& trees);

struct SequenceFile {
    /// Either a path (relative paths resolve against the sequence file) or an inline drawing.
    std::optional<std::string> drawing_path;
    std::optional<Json> drawing_inline;
    std::string method;
    std::vector<Json> trees;  ///< each a list of [u, v] pairs
    bool certified = false;
    std::string digest;
};

Json sequence_to_json(const Drawing& d, const TransformSequence& seq, const std::optional<std::string>& drawing_path);
SequenceFile sequence_file_from_json(const Json& j);

Json class_report_to_json(const Drawing& d, const ClassReport& r);
Json error_to_json(const Error& e);

/// Nodes labelled by their tree strings, one undirected edge per compatible pair.
std::string compat_to_dot(const Drawing& d, const CompatGraph& g);

}  // namespace cst
