#include "permsep/io.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace permsep::io {

std::string permutation_line(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(p[i]);
  }
  s += ']';
  return s;
}

Permutation parse_permutation(const Json& j) {
  if (!j.is_array()) throw std::runtime_error("a permutation must be a JSON array");
  std::vector<Vertex> seq;
  seq.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xFFFFFFFFULL) {
      throw std::runtime_error("permutation entries must be non-negative 32-bit integers");
    }
    seq.push_back(v.get<Vertex>());
  }
  return Permutation(std::move(seq));
}

void write_family(std::ostream& out, const std::optional<Json>& header,
                  std::span<const Permutation> members) {
  if (header) out << header->dump() << '\n';
  for (const Permutation& p : members) out << permutation_line(p) << '\n';
}

FamilyFile read_family(std::istream& in) {
  FamilyFile f;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Json j = Json::parse(line);
      if (j.is_object()) {
        if (f.header || !f.members.empty()) throw std::runtime_error("header must be the first line");
        f.header = std::move(j);
      } else {
        f.members.push_back(parse_permutation(j));
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (f.header) {
    const Json& h = *f.header;
    if (h.contains("members") && h["members"] != Json(f.members.size())) {
      throw std::runtime_error("header member count disagrees with the file");
    }
    if (h.contains("n")) {
      for (const Permutation& p : f.members) {
        if (h["n"] != Json(p.size())) throw std::runtime_error("header n disagrees with a member");
      }
    }
  }
  return f;
}

FamilyFile read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_family(in);
}

void write_family_file(const std::string& path, const std::optional<Json>& header,
                       std::span<const Permutation> members) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_family(out, header, members);
  if (!out) throw std::runtime_error("write failed for " + path);
}

Json to_json(const LabelledGraph& g) {
  Json j;
  j["isolated"] = g.isolated() ? Json(*g.isolated()) : Json(nullptr);
  Json grids = Json::array();
  for (const Grid& grid : g.grids()) {
    Json cells(std::vector<Vertex>(grid.cells().begin(), grid.cells().end()));
    grids.push_back(Json{{"w", grid.width()}, {"h", grid.height()}, {"cells", std::move(cells)}});
  }
  j["grids"] = std::move(grids);
  Json extra = Json::array();
  for (const auto& [edge, label] : g.extra_edges()) {
    extra.push_back(Json::array({edge.lo, edge.hi, std::string(1, label_char(label))}));
  }
  j["extra_edges"] = std::move(extra);
  return j;
}

LabelledGraph labelled_graph_from_json(const Json& j) {
  if (!j.is_object()) throw std::runtime_error("a labelled graph must be a JSON object");
  std::optional<Vertex> isolated;
  if (j.contains("isolated") && !j["isolated"].is_null()) isolated = j["isolated"].get<Vertex>();
  std::vector<Grid> grids;
  if (j.contains("grids")) {
    for (const Json& g : j["grids"]) {
      grids.emplace_back(g.at("w").get<std::size_t>(), g.at("h").get<std::size_t>(),
                         g.at("cells").get<std::vector<Vertex>>());
    }
  }
  std::map<Edge, Label> extra;
  if (j.contains("extra_edges")) {
    for (const Json& e : j["extra_edges"]) {
      if (!e.is_array() || e.size() != 3) throw std::runtime_error("extra edges are [u, v, label]");
      const std::string label = e[2].get<std::string>();
      if (label != "a" && label != "b") throw std::runtime_error("edge labels are \"a\" or \"b\"");
      const Edge edge = Edge::of(e[0].get<Vertex>(), e[1].get<Vertex>());
      if (!extra.emplace(edge, label == "a" ? Label::A : Label::B).second) {
        throw std::runtime_error("extra edge listed twice");
      }
    }
  }
  return LabelledGraph(std::move(grids), isolated, std::move(extra));
}

std::vector<LabelledGraph> read_labelled_graphs(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<LabelledGraph> out;
  Json whole = Json::parse(text, nullptr, false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (const Json& g : whole) out.push_back(labelled_graph_from_json(g));
    } else {
      out.push_back(labelled_graph_from_json(whole));
    }
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(labelled_graph_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Json shape_census_json(const Census& c) {
  Json j = Json::array();
  for (const auto& [shape, count] : c) {
    j.push_back(Json{{"w", shape.w}, {"h", shape.h}, {"count", count}});
  }
  return j;
}

Json to_json(const FamilyStats& s) {
  return Json{{"family_size", to_string(s.family_size)},
              {"grid_count", s.grid_count},
              {"census", shape_census_json(s.census)},
              {"value", to_string(s.value)},
              {"log2_value", log2_big(s.value)},
              {"vertex_count", s.vertex_count}};
}

Json to_json(const FamilyReport& r) {
  Json j{{"ok", r.ok}, {"family_size", r.family_size}, {"pairs_checked", r.pairs_checked}};
  if (r.mode.kind == VerifyMode::Kind::Exhaustive) {
    j["mode"] = "exhaustive";
  } else {
    j["mode"] = "sampled";
    j["seed"] = r.mode.seed;
    j["samples"] = r.mode.count;
  }
  j["witness"] = r.witness ? Json::array({r.witness->first, r.witness->second}) : Json(nullptr);
  return j;
}

Json to_json(const CliqueResult& r) {
  return Json{{"size", r.size},
              {"proven_optimal", r.proven_optimal},
              {"nodes", r.nodes},
              {"witness", r.witness}};
}

Json to_json(const WidthDoubleSummary& s) {
  return Json{{"shape", Json{{"w", s.shape.w}, {"h", s.shape.h}}},
              {"g", s.g},
              {"a_sequence", s.sequence.values},
              {"family_size", to_string(s.family_size)},
              {"wide_grids", s.wide_grids},
              {"leftover_grids", s.leftover_grids},
              {"leftover_vertices", s.leftover_vertices},
              {"produced", shape_census_json(s.produced)}};
}

}  // namespace permsep::io
