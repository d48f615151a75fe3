#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "towerkit/monotone.hpp"

namespace towerkit {

/// Finite abstract simplicial complex with a fixed global vertex order.
///
/// Vertices are 0..n-1 in list order; a face is a sorted vertex list. Read as a
/// simplicial set, the n-simplices are the weakly increasing vertex sequences whose
/// underlying set is a face, so simplicial maps between complexes are exactly the
/// vertex maps that are weakly monotone along every face and send faces to faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given facets. Facet entries are vertex indices.
  static SimplicialComplex from_facets(std::vector<std::string> labels,
                                       const std::vector<std::vector<int>>& facets);
  /// Exact face family; throws InvariantError if it is not downward closed or a
  /// vertex singleton is missing.
  static SimplicialComplex from_faces(std::vector<std::string> labels, const std::vector<std::vector<int>>& faces);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  /// Faces of dimension d, each sorted, listed lexicographically.
  const std::vector<std::vector<int>>& faces(int d) const;
  std::size_t face_count(int d) const { return d < 0 || d > dimension() ? 0 : faces_[d].size(); }
  std::size_t total_faces() const;
  std::vector<std::size_t> f_vector() const;
  std::vector<std::vector<int>> facets() const;

  /// Index of a sorted face within faces(size-1), or -1.
  int face_index(std::span<const int> sorted) const;
  bool contains(std::span<const int> sorted) const { return face_index(sorted) >= 0; }
  bool has_edge(int a, int b) const;

  /// Re-check closure and vertex coverage; throws InvariantError.
  void validate() const;

  bool operator==(const SimplicialComplex& o) const { return labels_ == o.labels_ && faces_ == o.faces_; }

 private:
  void build_index();

  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<int>>> faces_;
  std::unordered_map<std::vector<int>, int, VecHash> index_;
  std::vector<std::uint8_t> adjacency_;
};

/// Vertex map between complexes; a simplicial map when is_simplicial_map holds.
using VertexMap = std::vector<int>;

bool is_simplicial_map(const SimplicialComplex& dom, const SimplicialComplex& tgt, const VertexMap& f);
VertexMap compose_maps(const VertexMap& g, const VertexMap& f);
VertexMap identity_vertex_map(int n);

// Constructors -------------------------------------------------------------

SimplicialComplex point_complex();
SimplicialComplex empty_complex();
/// Full simplex on {0..n}; its k-skeleton when k < n.
SimplicialComplex simplex_complex(int n, int k = -1);
/// Boundary of the n-simplex.
SimplicialComplex simplex_boundary(int n);
/// n+1 isolated points labelled by the given prefix.
SimplicialComplex discrete_complex(int points, const std::string& prefix = "");
SimplicialComplex sphere0();
/// Cycle graph on n >= 3 vertices.
SimplicialComplex cycle_graph(int n);
SimplicialComplex complete_graph(int n);
SimplicialComplex complete_bipartite(int a, int b);

enum class LabelCollision { tag, reject };

/// Join A * B: vertices of A then of B, faces a u b with a, b faces or empty.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b,
                       LabelCollision on_collision = LabelCollision::tag);
/// f * g on a join built by join().
VertexMap join_map(const VertexMap& f, int a_target_size, const VertexMap& g);
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
/// Identify vertex 0 of a with vertex 0 of b.
SimplicialComplex wedge(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& a);
SimplicialComplex suspension(const SimplicialComplex& a);
SimplicialComplex complex_skeleton(const SimplicialComplex& a, int k);

/// Simplicial-set product as a complex: vertex (a, b) has index a * |B| + b,
/// faces are chains in the componentwise order whose projections are faces.
SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b);
VertexMap product_map(const VertexMap& f, int a_target_size, const VertexMap& g, int b_target_size,
                      int b_source_size);

/// Barycentric subdivision: vertices are the faces of a (by dimension, then
/// lexicographic), faces are inclusion chains. Agrees with Kan's subdivision on
/// the nonsingular simplicial set underlying the complex.
SimplicialComplex subdivision(const SimplicialComplex& a);
/// sd(f): a face goes to the face spanned by its image.
VertexMap subdivision_map(const SimplicialComplex& dom, const SimplicialComplex& tgt, const VertexMap& f);
/// Last-vertex map sd(a) -> a.
VertexMap last_vertex_map(const SimplicialComplex& a);

/// Nerve of a finite poset on 0..n-1 with leq[i][j] meaning i <= j. The index
/// order must be a linear extension.
SimplicialComplex poset_nerve(const std::vector<std::string>& labels, const std::vector<std::vector<bool>>& leq);

/// Full subcomplex on the listed vertices (kept in increasing order); returns the
/// inclusion map in `inclusion` when non-null.
SimplicialComplex full_subcomplex(const SimplicialComplex& a, const std::vector<int>& vertices,
                                  VertexMap* inclusion = nullptr);

}  // namespace towerkit
