#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hourglass {

enum class Color { Black, White };
enum class VertexKind { Boundary, Internal };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

struct Vertex {
  Color color = Color::Black;
  VertexKind kind = VertexKind::Internal;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  int u = 0;
  int v = 0;
  int mult = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Planar bipartite multigraph in a disk, stored as a rotation system.
/// Vertex and edge ids are indices into `vertices` and `edges`.
/// rotation[v] lists the edges at v in clockwise order; boundary lists the
/// boundary vertices b_1, ..., b_n in clockwise order around the disk.
struct HourglassGraph {
  int r = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation;
  std::vector<int> boundary;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int boundary_size() const { return static_cast<int>(boundary.size()); }
  bool is_boundary(int v) const { return vertices[v].kind == VertexKind::Boundary; }
  bool is_internal(int v) const { return vertices[v].kind == VertexKind::Internal; }
  int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
  /// Sum of multiplicities of incident edges.
  int degree(int v) const;
  int simple_degree(int v) const { return static_cast<int>(rotation[v].size()); }
  /// boundary_positions()[v] is the 0-based index of v in `boundary`, or -1.
  std::vector<int> boundary_positions() const;
  /// Index of edge e in rotation[v]; -1 when not incident.
  int rotation_index(int v, int e) const;
  /// Connected components as vertex lists, each sorted, ordered by least vertex.
  std::vector<std::vector<int>> components() const;

  int add_vertex(Color c, VertexKind k);
  /// Appends an edge without touching the rotation system.
  int add_edge(int u, int v, int mult);

  friend bool operator==(const HourglassGraph&, const HourglassGraph&) = default;
};

struct ValidationReport {
  bool ok = true;
  bool standard_type = false;
  int white = 0;
  int black = 0;
  /// n / r when standard type and divisible; otherwise empty.
  std::optional<int> plucker_degree;
  std::vector<std::string> violations;
};

/// Checks every structural invariant; never throws.
ValidationReport validate(const HourglassGraph& g);

/// n / r for a standard-type graph. Throws std::domain_error otherwise.
int plucker_degree(const HourglassGraph& g);
/// Numbers of internal white and internal black vertices.
std::pair<int, int> white_black_counts(const HourglassGraph& g);

/// A face: vertices and edges alternate clockwise, edges[k] joins
/// vertices[k] and vertices[k+1 mod len].
struct Face {
  std::vector<int> vertices;
  std::vector<int> edges;
  int m_value = 0;
  int length() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Face&, const Face&) = default;
};

/// Regions of the embedding that avoid the disk boundary, traced clockwise
/// in the underlying simple graph. Regions of isolated components are
/// excluded. Ordered deterministically.
std::vector<Face> faces(const HourglassGraph& g);

/// Sub-graph cut out by a Jordan curve around the internal vertex set
/// `inside`. Each cut edge of multiplicity m becomes m boundary vertices
/// colored like its outside endpoint. Throws std::domain_error when the
/// cut edges do not form a single cyclic sequence.
HourglassGraph restrict_graph(const HourglassGraph& g, const std::vector<int>& inside);
/// restrict_graph to the corners of face f.
HourglassGraph restrict_to_face(const HourglassGraph& g, const Face& f);

/// A square face with no boundary vertex, clockwise corners v_1..v_4,
/// standing alone: corner k gets r - (its two square multiplicities)
/// boundary leaves of the opposite color. first_color is the color of v_1.
HourglassGraph standalone_square(int r, const std::vector<int>& mults, Color first_color);

/// Contraction site: an internal vertex of simple degree two whose two
/// neighbours are distinct internal vertices. Contracting deletes it and
/// merges the neighbours.
struct ContractionSite {
  int vertex = 0;
  int edge = 0;  // the smaller of its two edge ids
  friend bool operator==(const ContractionSite&, const ContractionSite&) = default;
  friend auto operator<=>(const ContractionSite&, const ContractionSite&) = default;
};

std::vector<ContractionSite> contraction_sites(const HourglassGraph& g);
/// Throws std::domain_error when `site` is not a contraction site of g.
HourglassGraph apply_contraction(const HourglassGraph& g, const ContractionSite& site);
/// Applies contractions at the least site until none remains.
HourglassGraph normalize_contracted(const HourglassGraph& g);
bool is_contracted(const HourglassGraph& g);

/// True when f has four distinct internal corners and m(f) = r.
bool square_move_applies(const HourglassGraph& g, const Face& f);
/// Square move on f followed by contraction normalization.
/// Throws std::domain_error unless square_move_applies.
HourglassGraph apply_square_move(const HourglassGraph& g, const Face& f);

struct Ear {
  int v = 0;                        // black vertex of simple degree 3
  int a = 0, b = 0, c = 0;          // claw centers, clockwise around v
  std::vector<int> claw_a;          // boundary positions (1-based), clockwise
  std::vector<int> claw_b;
  std::vector<int> claw_c;
  int p = 0;                        // multiplicity of the c-v edge
  int q = 0;                        // multiplicity of the a-v edge
  friend bool operator==(const Ear&, const Ear&) = default;
};

std::vector<Ear> find_ears(const HourglassGraph& g);
/// Neither 1 nor partner_of_one (boundary positions) lies in claw B.
bool is_proper_ear(const Ear& e, int partner_of_one);
/// Deletes v, b and the ossicles; the first q positions of B join A and
/// the last p join C. Boundary labels are unchanged.
HourglassGraph remove_ear(const HourglassGraph& g, const Ear& e);

/// One white center joined to r black boundary vertices.
HourglassGraph star_graph(int r);

/// Relabels vertices and edges in a canonical traversal order seeded at
/// b_1, b_2, ...; rotations start at the edge of first discovery.
HourglassGraph canonicalize(const HourglassGraph& g);
/// Invariant under relabeling internal vertices and edges.
std::string canonical_form(const HourglassGraph& g);
bool isomorphic(const HourglassGraph& g, const HourglassGraph& h);

/// b'_j = b_{j+1}.
HourglassGraph rotate(const HourglassGraph& g);
/// Mirror image: b'_j = b_{n+1-j} and all rotations reversed.
HourglassGraph reflect(const HourglassGraph& g);

/// Copy of g with every multiplicity set to 1.
HourglassGraph underlying_simple(const HourglassGraph& g);

}  // namespace hourglass
