#include "hourglass/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace hourglass {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const RectTableau& t) {
  return {{"rows", t.rows()}, {"cols", t.cols()}, {"entries", t.to_rows()}};
}

Json to_json(const NoncrossingMatching& m) {
  Json pairs = Json::array();
  for (auto [a, b] : m.pairs()) pairs.push_back({a, b});
  return {{"n", m.size()}, {"pairs", pairs}};
}

Json to_json(const WeightedPolygonGraph& p) {
  Json diags = Json::array();
  for (const auto& d : p.diagonals) diags.push_back({{"a", d.a}, {"b", d.b}, {"w", d.weight}});
  return {{"s", p.s},
          {"boundary_weights", p.boundary_weights},
          {"diagonals", diags},
          {"claw_sizes", p.claw_sizes},
          {"claw_offsets", p.claw_offsets}};
}

Json to_json(const HourglassGraph& g) {
  Json verts = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    verts.push_back({{"id", v},
                     {"color", g.vertices[v].color == Color::White ? "white" : "black"},
                     {"kind", g.vertices[v].kind == VertexKind::Boundary ? "boundary" : "internal"}});
  }
  Json edges = Json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    edges.push_back({{"id", e}, {"u", g.edges[e].u}, {"v", g.edges[e].v}, {"m", g.edges[e].mult}});
  }
  Json rot = Json::object();
  for (int v = 0; v < g.vertex_count(); ++v) rot[std::to_string(v)] = g.rotation[v];
  return {{"r", g.r}, {"boundary", g.boundary}, {"vertices", verts}, {"edges", edges}, {"rotation", rot}};
}

Json to_json(const Permutation& p) { return p.images(); }

Json to_json(const TripSegment& s) {
  return {{"i", s.i},
          {"start", s.start},
          {"end", s.end},
          {"closed", s.closed},
          {"trivial", s.trivial},
          {"vertices", s.vertices},
          {"edges", s.edges}};
}

RectTableau tableau_from_json(const Json& j) {
  return guarded("tableau", [&] {
    const int rows = field(j, "rows").get<int>();
    const int cols = field(j, "cols").get<int>();
    const auto entries = field(j, "entries").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(entries.size()) != rows) throw InputError("tableau: entries do not have \"rows\" rows");
    for (const auto& row : entries) {
      if (static_cast<int>(row.size()) != cols) throw InputError("tableau: a row does not have \"cols\" entries");
    }
    return RectTableau::from_rows(entries);
  });
}

NoncrossingMatching matching_from_json(const Json& j) {
  return guarded("matching", [&] {
    const int n = field(j, "n").get<int>();
    return NoncrossingMatching::from_pairs(n, field(j, "pairs").get<std::vector<std::pair<int, int>>>());
  });
}

WeightedPolygonGraph polygon_from_json(const Json& j) {
  return guarded("polygon", [&] {
    WeightedPolygonGraph p;
    p.s = field(j, "s").get<int>();
    p.boundary_weights = field(j, "boundary_weights").get<std::vector<int>>();
    if (static_cast<int>(p.boundary_weights.size()) != p.s) throw InputError("polygon: need s boundary weights");
    for (const auto& d : field(j, "diagonals")) {
      int a = field(d, "a").get<int>(), b = field(d, "b").get<int>();
      if (a > b) std::swap(a, b);
      if (a < 1 || b > p.s) throw InputError("polygon: diagonal endpoint out of range");
      p.diagonals.push_back({a, b, field(d, "w").get<int>()});
    }
    std::sort(p.diagonals.begin(), p.diagonals.end());
    if (j.contains("claw_sizes")) p.claw_sizes = j.at("claw_sizes").get<std::vector<int>>();
    if (j.contains("claw_offsets")) p.claw_offsets = j.at("claw_offsets").get<std::vector<int>>();
    return p;
  });
}

HourglassGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    HourglassGraph g;
    g.r = field(j, "r").get<int>();
    std::map<int, int> vid, eid;
    for (const auto& v : field(j, "vertices")) {
      const int id = field(v, "id").get<int>();
      const auto color = field(v, "color").get<std::string>();
      const auto kind = field(v, "kind").get<std::string>();
      if (color != "white" && color != "black") throw InputError("graph: bad color \"" + color + "\"");
      if (kind != "boundary" && kind != "internal") throw InputError("graph: bad kind \"" + kind + "\"");
      if (!vid.emplace(id, g.vertex_count()).second) throw InputError("graph: duplicate vertex id " + std::to_string(id));
      g.add_vertex(color == "white" ? Color::White : Color::Black,
                   kind == "boundary" ? VertexKind::Boundary : VertexKind::Internal);
    }
    auto vertex = [&](int id) {
      auto it = vid.find(id);
      if (it == vid.end()) throw InputError("graph: unknown vertex id " + std::to_string(id));
      return it->second;
    };
    for (const auto& e : field(j, "edges")) {
      const int id = field(e, "id").get<int>();
      if (!eid.emplace(id, g.edge_count()).second) throw InputError("graph: duplicate edge id " + std::to_string(id));
      g.add_edge(vertex(field(e, "u").get<int>()), vertex(field(e, "v").get<int>()), field(e, "m").get<int>());
    }
    for (int b : field(j, "boundary").get<std::vector<int>>()) g.boundary.push_back(vertex(b));
    for (const auto& [key, list] : field(j, "rotation").items()) {
      int id;
      try {
        id = std::stoi(key);
      } catch (const std::exception&) {
        throw InputError("graph: rotation key \"" + key + "\" is not a vertex id");
      }
      auto& rot = g.rotation[vertex(id)];
      for (int e : list.get<std::vector<int>>()) {
        auto it = eid.find(e);
        if (it == eid.end()) throw InputError("graph: unknown edge id " + std::to_string(e));
        rot.push_back(it->second);
      }
    }
    return g;
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hourglass
