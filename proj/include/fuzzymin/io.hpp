#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fuzzymin/algebra.hpp"
#include "fuzzymin/bisimulation.hpp"
#include "fuzzymin/graph.hpp"
#include "fuzzymin/interpretation.hpp"
#include "fuzzymin/partition.hpp"

namespace fuzzymin::io {

using Json = nlohmann::json;

/// Throws IoError if the file cannot be read and ParseError on malformed JSON.
Json read_json(const std::filesystem::path &path);
/// Writes `j` with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path &path, const Json &j);

/// A degree from JSON: a string "0.8", "4/5" or "#k" (the k-th element of a
/// finite chain), or a number read through its shortest decimal spelling.
Degree degree_from_json(const Json &j, const Algebra &algebra);
/// Exact decimal when it terminates, otherwise a fraction string.
Json degree_to_json(const Degree &d);

/// {"chain": N, "tnorm": [[..]], "snorm": [[..]], "residuum": [[..]], "neg": [..]}
Algebra lattice_from_json(const Json &j);
Json lattice_to_json(const Algebra &algebra);

/// "godel", "product", "lukasiewicz" or "lattice:PATH".
Algebra algebra_from_selector(const std::string &selector);

/// {"vertices": [..], "vertex_labels": {v: {label: degree}}, "edges": [[from, label, to, degree]]}
FuzzyGraph graph_from_json(const Json &j, const Algebra &algebra);
Json graph_to_json(const FuzzyGraph &g);

/// {"domain": [..], "individuals": {a: x}, "concepts": {A: {x: degree}}, "roles": {r: [[x, y, degree]]}}
Interpretation interpretation_from_json(const Json &j, const Algebra &algebra);
Json interpretation_to_json(const Interpretation &i);

/// Array of blocks, each an array of vertex names, in canonical order.
Json partition_to_json(const Partition &p, const std::vector<std::string> &names);

/// Array of [x, x'] name pairs.
Relation relation_from_json(const Json &j, const Interpretation &left, const Interpretation &right);
Json relation_to_json(const Relation &z, const Interpretation &left, const Interpretation &right);

} // namespace fuzzymin::io
