#pragma once

#include <string>
#include <vector>

#include "towerkit/errors.hpp"
#include "towerkit/normal_form.hpp"
#include "towerkit/simplicial_complex.hpp"
#include "towerkit/simplicial_set.hpp"

namespace towerkit {

/// Nondegenerate cells of a set listed degree-major, with the flat position of each.
class FlatCells {
 public:
  explicit FlatCells(const SimplicialSet& x);
  std::size_t size() const { return cells_.size(); }
  const Simplex& operator[](std::size_t t) const { return cells_[t]; }
  int position(int degree, int cell) const { return offset_[degree] + cell; }
  int top() const { return static_cast<int>(offset_.size()) - 2; }

 private:
  std::vector<Simplex> cells_;
  std::vector<int> offset_;
};

/// Every simplicial map from the finite set `source` (complete) to the set behind
/// `target`, as target simplex ids per flat source cell, in lexicographic order.
std::vector<std::vector<int>> enumerate_maps(const SimplicialSet& source, const SimplexTable& target,
                                             const Limits& limits, const std::string& what);

/// Normal forms of the image of every face of `dom` (flat, by dimension then
/// lexicographic) under a simplicial vertex map into `tgt`.
std::vector<Simplex> induced_cells(const SimplicialComplex& dom, const SimplicialComplex& tgt, const VertexMap& g);

/// f . g for f given by ids on the flat cells of some set P and g a map into P given
/// by the normal-form images of the flat cells of its source.
std::vector<int> precompose(const std::vector<int>& f, const FlatCells& p_cells, const std::vector<Simplex>& g,
                            const SimplexTable& y);

/// Backtracking enumeration of vertex maps between ordered complexes, split into
/// blocks (one domain/target pair each) tied together by value links.
class VertexProblem {
 public:
  /// Adds a block; returns the global offset of its first domain vertex.
  int add_block(const SimplicialComplex& domain, const SimplicialComplex& target);
  /// value(later) == push[value(earlier)].
  void push_link(int earlier, int later, const VertexMap& push);
  /// pull[value(later)] == value(earlier).
  void pull_link(int earlier, int later, const VertexMap& pull);
  /// Restrict a vertex to one value.
  void fix(int vertex, int value);

  int size() const { return total_; }

  /// All solutions as keys (values in global vertex order). Throws CapExceeded when
  /// the search visits more than `limits.node_cap()` nodes, finds more than
  /// `limits.cap` solutions or outgrows `limits.key_budget`.
  std::vector<Key> solve(const Limits& limits, const std::string& what, int degree) const;

 private:
  struct Block {
    const SimplicialComplex* domain;
    const SimplicialComplex* target;
    int offset;
    bool flag_target;
  };
  struct Link {
    int other;
    int map;
    bool push;
  };
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
  std::vector<std::vector<Link>> links_;
  std::vector<int> fixed_;
  std::vector<VertexMap> maps_;
  int total_ = 0;
};

/// True when every clique of the 1-skeleton is a face.
bool is_flag_complex(const SimplicialComplex& k);

}  // namespace towerkit
