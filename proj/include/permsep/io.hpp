#pragma once

#include "permsep/labelled_graph.hpp"
#include "permsep/merge.hpp"
#include "permsep/permutation.hpp"
#include "permsep/solver.hpp"
#include "permsep/verify.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permsep::io {

using Json = nlohmann::ordered_json;

/// One JSONL line: a compact array of ids.
std::string permutation_line(const Permutation& p);
Permutation parse_permutation(const Json& j);

struct FamilyFile {
  std::optional<Json> header;
  std::vector<Permutation> members;
};

/// Header object (if any) on the first line, then one permutation per line.
void write_family(std::ostream& out, const std::optional<Json>& header,
                  std::span<const Permutation> members);
/// Throws std::runtime_error with a line number on malformed input, or when
/// the header's "n" or "members" disagree with the file.
FamilyFile read_family(std::istream& in);

FamilyFile read_family_file(const std::string& path);
void write_family_file(const std::string& path, const std::optional<Json>& header,
                       std::span<const Permutation> members);

/// {"isolated": id | null, "grids": [{"w","h","cells"}], "extra_edges": [[u, v, "a"|"b"]]}
/// with extra_edges sorted by (min, max).
Json to_json(const LabelledGraph& g);
LabelledGraph labelled_graph_from_json(const Json& j);
/// A single object, an array of objects, or JSONL of objects.
std::vector<LabelledGraph> read_labelled_graphs(std::istream& in);

Json to_json(const FamilyStats& s);
Json to_json(const FamilyReport& r);
/// Wall time is left out so that the output is reproducible.
Json to_json(const CliqueResult& r);
Json to_json(const WidthDoubleSummary& s);
Json shape_census_json(const Census& c);

}  // namespace permsep::io
