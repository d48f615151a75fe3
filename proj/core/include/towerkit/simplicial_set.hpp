#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "towerkit/monotone.hpp"

namespace towerkit {

/// A simplex in Eilenberg-Zilber normal form: a degeneracy applied to a
/// nondegenerate cell.
///
/// The degeneracy [degree] ->> [base] is stored as a bit mask: bit j is set when
/// positions j and j+1 collapse. The degeneracy word is the set bits, read from
/// the highest down.
struct Simplex {
  int degree = 0;
  int cell = -1;
  std::uint32_t collapse = 0;

  int base_degree() const { return degree - std::popcount(collapse); }
  bool nondegenerate() const { return collapse == 0; }
  Mono surjection() const;
  std::vector<int> degeneracy_word() const;

  static Simplex from_surjection(const Mono& surj, int cell);
  static Simplex cell_at(int degree, int cell) { return {degree, cell, 0}; }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    return (static_cast<std::size_t>(s.degree) * 0x9e3779b97f4a7c15ull) ^
           (static_cast<std::size_t>(static_cast<unsigned>(s.cell)) << 20) ^ s.collapse;
  }
};

/// Degreewise-finite simplicial set in nondegenerate normal form, known through
/// `bound()`. A `complete()` set has no nondegenerate cells above its bound.
class SimplicialSet {
 public:
  SimplicialSet() = default;
  SimplicialSet(int bound, bool complete) : bound_(bound), complete_(complete) {}

  int bound() const { return bound_; }
  bool complete() const { return complete_; }
  /// Highest degree with a nondegenerate cell among the known degrees, -1 if empty.
  int dimension() const;
  bool empty() const { return cell_count(0) == 0; }

  /// Throws BoundError when degree d is not known.
  void known_through(int d, const std::string& what) const;

  std::size_t cell_count(int n) const;
  std::vector<std::size_t> cell_counts() const;
  /// Number of all n-simplices, degenerate ones included.
  std::uint64_t simplex_count(int n) const;

  const std::string& label(int n, int c) const { return labels_[n][c]; }
  /// i-th face of the nondegenerate cell c in degree n.
  const Simplex& face(int n, int c, int i) const { return faces_[n][c][i]; }

  Simplex face_of(const Simplex& x, int i) const;
  Simplex degeneracy_of(const Simplex& x, int j) const;
  /// x . theta for a monotone theta : [k] -> [x.degree].
  Simplex apply(const Simplex& x, const Mono& theta) const;

  /// All n-simplices in a fixed order: by base degree, then cell, then surjection.
  std::vector<Simplex> all_simplices(int n) const;

  /// Exhaustive simplicial identity check through the bound; throws InvariantError.
  void check_identities() const;

  /// Structural equality (labels ignored).
  bool same_structure(const SimplicialSet& o) const;

  // Construction.
  int add_cell(int n, std::vector<Simplex> faces, std::string label = {});
  void set_bound(int bound, bool complete) {
    bound_ = bound;
    complete_ = complete;
  }

 private:
  void ensure_degree(int n);

  int bound_ = 0;
  bool complete_ = false;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<Simplex>>> faces_;
};

/// Simplicial map in normal form: the image of every nondegenerate source cell.
struct SimplicialMap {
  std::vector<std::vector<Simplex>> image;  ///< image[n][c]

  /// Image of an arbitrary source simplex.
  Simplex operator()(const SimplicialSet& target, const Simplex& x) const;
};

/// Checks that f commutes with faces on every source cell through `through`.
bool is_simplicial(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f, int through);

/// All simplices of a set through a degree, with ids and a boundary index.
class SimplexTable {
 public:
  SimplexTable(const SimplicialSet& x, int through);

  const SimplicialSet& set() const { return *x_; }
  int through() const { return through_; }
  const std::vector<Simplex>& simplices(int n) const { return all_[n]; }
  int id(const Simplex& s) const;
  /// Ids of the simplices with the given face ids (d_0, ..., d_n); n >= 1.
  const std::vector<int>& with_boundary(int n, const std::vector<int>& face_ids) const;
  const std::vector<int>& boundary(int n, int id) const { return bnd_[n][id]; }

 private:
  const SimplicialSet* x_;
  int through_;
  std::vector<std::vector<Simplex>> all_;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> ids_;
  std::vector<std::vector<std::vector<int>>> bnd_;
  std::vector<std::unordered_map<std::vector<int>, std::vector<int>, VecHash>> by_boundary_;
};

}  // namespace towerkit
