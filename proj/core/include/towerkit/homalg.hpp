#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "towerkit/simplicial_complex.hpp"
#include "towerkit/simplicial_set.hpp"

namespace towerkit {

using BigInt = boost::multiprecision::cpp_int;

/// Column-sparse integer matrix; each column is sorted by row.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns;
};

/// Dense arbitrary-precision matrix, row-major.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static DenseMatrix identity(int n);
  static DenseMatrix from_rows(const std::vector<std::vector<long long>>& rows, int cols = -1);
  BigInt& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const BigInt& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const DenseMatrix&) const = default;
};

DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix to_dense(const SparseMatrix& m);
/// Exact determinant by fraction-free elimination.
BigInt determinant(const DenseMatrix& m);

/// Normalized chains of X through degree `top`. boundary[n] maps degree n to
/// degree n-1; boundary[0] is the augmentation when reduced, else empty.
struct ChainComplex {
  int top = 0;
  bool reduced = false;
  std::vector<int> rank;                 ///< basis sizes per degree 0..top
  std::vector<SparseMatrix> boundary;    ///< 0..top

  /// Checks d o d = 0 in every representable degree.
  bool squares_to_zero() const;
};

ChainComplex chains(const SimplicialSet& x, int top, bool reduced = false);

struct SmithResult {
  DenseMatrix s, u, v;
  std::vector<BigInt> diagonal;  ///< nonzero invariant factors d1 | d2 | ...
  bool verified = false;         ///< U M V = S and U, V unimodular
};

/// U M V = S with S diagonal and d1 | d2 | ...; pivots of minimal absolute value.
SmithResult smith_normal_form(const DenseMatrix& m);

/// Rank and non-unit invariant factors of a sparse matrix (unit pivots are eliminated
/// sparsely; the residual goes through dense Smith form).
struct InvariantFactors {
  int rank = 0;
  std::vector<BigInt> torsion;
};
InvariantFactors invariant_factors(const SparseMatrix& m);

struct HomologyGroup {
  int degree = 0;
  int betti = 0;
  std::vector<BigInt> torsion;
  bool operator==(const HomologyGroup&) const = default;
};

struct HomologyResult {
  bool reduced = false;
  std::vector<HomologyGroup> groups;  ///< ascending degree; starts at -1 when reduced

  const HomologyGroup& at(int degree) const;
  int betti(int degree) const { return at(degree).betti; }
  bool trivial() const;
  /// Betti numbers from degree 0 (reduced -1 entry dropped).
  std::vector<int> bettis() const;
  bool same_groups(const HomologyResult& o) const { return groups == o.groups; }
};

/// H_n (or reduced) for 0 <= n <= r; needs cells through r+1.
HomologyResult homology(const SimplicialSet& x, int r, bool reduced = true);
HomologyResult homology(const ChainComplex& c, int r);

struct Connectivity {
  int value = -2;
  bool saturated = false;  ///< every reduced group through the bound vanished
  std::string tag;         ///< "homological" or "Hurewicz-valid"
};
Connectivity connectivity(const SimplicialSet& x, int b, bool simply_connected_hint = false);

/// Alternating count of nondegenerate cells through the known degrees.
long long euler_characteristic(const SimplicialSet& x);

struct GraphIsomorphism {
  bool isomorphic = false;
  VertexMap witness;  ///< vertex i of G goes to witness[i] of H
};
/// Exact decision for 1-dimensional complexes with at most 12 vertices.
GraphIsomorphism graph_isomorphic(const SimplicialComplex& g, const SimplicialComplex& h);

/// Components of the 1-skeleton: component index per vertex, numbered by least vertex.
std::vector<int> components(const SimplicialSet& x);
/// H_0(f) as a 0/1 matrix, rows indexed by components of b, columns by components of a.
std::vector<std::vector<int>> component_matrix(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f);
/// Rank of H_d(f) on unreduced homology, computed over GF(2147483647). Needs both
/// sets known through d + 1.
int induced_rank(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f, int d);

std::string homology_csv(const HomologyResult& h);
std::string to_string(const BigInt& v);

}  // namespace towerkit
