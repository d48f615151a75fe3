#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "towerkit/errors.hpp"
#include "towerkit/simplicial_set.hpp"

namespace towerkit {

/// Compact simplex key used by enumerated constructions (entries < 65536).
using Key = std::u16string;

Key make_key(const std::vector<int>& v);
std::vector<int> key_values(const Key& k);

/// A simplicial set presented by all of its simplices in each degree.
struct SimplexSource {
  /// Every n-simplex, degenerate ones included, in a deterministic order.
  std::function<std::vector<Key>(int n)> enumerate;
  std::function<Key(int n, const Key& x, int i)> face;
  /// s_j : X_n -> X_{n+1}.
  std::function<Key(int n, const Key& x, int j)> degeneracy;
  std::function<std::string(int n, const Key& x)> label;
};

/// Result of normalisation: the set plus, per degree, the normal form of every key.
struct NormalForm {
  SimplicialSet set;
  std::vector<std::unordered_map<Key, Simplex>> forms;
};

/// Recovers the nondegenerate normal form through `bound`: degenerate keys are the
/// images of degeneracies, the rest become cells in enumeration order. Uniqueness
/// of every normal form is asserted (InvariantError), never assumed.
NormalForm normalize(const SimplexSource& src, int bound, bool complete, const Limits& limits,
                     const std::string& what);

}  // namespace towerkit
