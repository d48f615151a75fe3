#pragma once

#include <functional>
#include <string>
#include <vector>

#include "towerkit/errors.hpp"
#include "towerkit/normal_form.hpp"
#include "towerkit/simplicial_complex.hpp"
#include "towerkit/simplicial_set.hpp"

namespace towerkit {

/// Delta^n known through `bound` (complete once bound >= n).
SimplicialSet standard_simplex(int n, int bound);
/// Cells are the faces of K in the global vertex order. bound < 0 means dim K.
SimplicialSet complex_to_sset(const SimplicialComplex& k, int bound = -1);
/// Keeps nondegenerate cells of degree <= k.
SimplicialSet skeleton(const SimplicialSet& x, int k);

/// Degree-n cells are the maps sk_k Delta^n -> X.
SimplicialSet coskeleton(const SimplicialSet& x, int k, int bound, const Limits& limits = {});
/// Product computed on pairs of simplices; cells labelled "(a|b)".
NormalForm product(const SimplicialSet& a, const SimplicialSet& b, int bound, const Limits& limits = {});
/// Degree-n cells are the maps K x Delta^n -> Y.
SimplicialSet mapping_space(const SimplicialSet& k, const SimplicialSet& y, int bound, const Limits& limits = {});

struct ExApprox {
  SimplicialSet set;
  SimplicialMap inclusion;  ///< X -> Ex^N X through the bound
};
/// N-fold Kan Ex: degree-n cells are the maps sd^N Delta^n -> X.
ExApprox ex_approx(const SimplicialSet& x, int depth, int bound, const Limits& limits = {});
/// N-fold barycentric subdivision of Delta^n with the iterated last-vertex map to Delta^n.
SimplicialComplex iterated_subdivision(const SimplicialComplex& a, int depth, VertexMap* last_vertex = nullptr);

/// p -> Z^{p+1} with deletion faces and duplication degeneracies, plus the extra
/// degeneracy (z) -> (z, v).
struct CechPower {
  NormalForm nf;
  int points = 0;
  int basepoint = 0;
  /// The extra degeneracy on a key of degree n-1 (the empty key is the augmentation point).
  Key extra(const Key& y) const;
};
CechPower cech_power(int points, int basepoint, int bound);

/// Checks every contracting-homotopy identity of the extra degeneracy on every
/// simplex through `through`. Returns the number of identities checked; failures
/// are appended to `failures` when non-null.
std::size_t check_contracting_identities(const CechPower& c, int through, std::vector<std::string>* failures);

/// Bisimplicial set given by all (p, q)-simplices.
struct BisimplicialSource {
  std::function<std::vector<Key>(int p, int q)> enumerate;
  std::function<Key(int p, int q, const Key& x, int i)> face_h;  ///< (p,q) -> (p-1,q)
  std::function<Key(int p, int q, const Key& x, int i)> face_v;  ///< (p,q) -> (p,q-1)
  std::function<Key(int p, int q, const Key& x, int j)> degeneracy_h;
  std::function<Key(int p, int q, const Key& x, int j)> degeneracy_v;
};
/// Degree-n cells of the diagonal are the (n, n)-simplices.
NormalForm diagonal_ss(const BisimplicialSource& y, int bound, const Limits& limits = {});
/// (p, q) -> A_p x B_q.
BisimplicialSource external_product(const SimplexTable& a, const SimplexTable& b);

/// Number of maps between finite sets (source complete).
std::size_t count_maps(const SimplicialSet& source, const SimplicialSet& target, const Limits& limits = {});

}  // namespace towerkit
