#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "towerkit/monotone.hpp"
#include "towerkit/simplicial_complex.hpp"

namespace towerkit {

/// Truncated k-fold cosimplicial object whose levels are ordered complexes.
///
/// Levels are indexed by tuples (j_1, ..., j_k) with j_d <= cobound(d). Structure
/// maps are stored for the generators (cofaces and codegeneracies in each
/// direction), keyed by their target level; every other monotone map is the
/// composite along its elementary factorisation. Arity 1 is the plain cosimplicial case.
class CosimplicialObject {
 public:
  using Index = std::vector<int>;

  CosimplicialObject() = default;
  CosimplicialObject(int arity, std::vector<int> cobounds);

  int arity() const { return static_cast<int>(cobounds_.size()); }
  int cobound(int dir) const { return cobounds_[dir]; }
  const std::vector<int>& cobounds() const { return cobounds_; }
  /// All level indices in lexicographic order.
  std::vector<Index> indices() const;

  const SimplicialComplex& level(const Index& j) const;
  const SimplicialComplex& level(int j) const { return level(Index{j}); }
  /// delta^i : [t-1] -> [t] in direction dir, landing in level `target` (t = target[dir]).
  const VertexMap& coface(int dir, const Index& target, int i) const;
  /// sigma^j : [t+1] -> [t] in direction dir, landing in level `target`.
  const VertexMap& codegeneracy(int dir, const Index& target, int j) const;
  /// Map induced by a monotone theta : [source[dir]] -> [target_degree] in direction dir.
  VertexMap structure(int dir, const Index& source, const Mono& theta, int target_degree) const;

  /// Throws InvariantError unless every structure map is simplicial, every
  /// direction is functorial on all monotone maps, and directions commute.
  void validate() const;

  void set_level(const Index& j, SimplicialComplex c) { levels_[j] = std::move(c); }
  void set_coface(int dir, const Index& target, int i, VertexMap m) { cofaces_[{dir, target, i}] = std::move(m); }
  void set_codegeneracy(int dir, const Index& target, int j, VertexMap m) {
    codegeneracies_[{dir, target, j}] = std::move(m);
  }

 private:
  struct MapKey {
    int dir;
    Index target;
    int index;
    auto operator<=>(const MapKey&) const = default;
  };
  std::vector<int> cobounds_;
  std::map<Index, SimplicialComplex> levels_;
  std::map<MapKey, VertexMap> cofaces_;
  std::map<MapKey, VertexMap> codegeneracies_;
};

/// Builds an object from a level function and the action of any monotone map in
/// a direction: a vertex map from level `source` to the level with j_dir replaced
/// by the target degree.
CosimplicialObject make_cosimplicial(
    std::vector<int> cobounds, const std::function<SimplicialComplex(const CosimplicialObject::Index&)>& level,
    const std::function<VertexMap(int dir, const CosimplicialObject::Index& source, const Mono& theta, int target)>& action);

/// Applies a functor on complexes levelwise.
CosimplicialObject transform(
    const CosimplicialObject& x, const std::function<SimplicialComplex(const SimplicialComplex&)>& on_level,
    const std::function<VertexMap(const VertexMap&, const SimplicialComplex&, const SimplicialComplex&)>& on_map);

/// Join of several complexes with the i-th part's labels prefixed by prefixes[i].
SimplicialComplex join_all(const std::vector<SimplicialComplex>& parts, const std::vector<std::string>& prefixes);

/// p -> sk_k Delta^p.
CosimplicialObject skeleton_cosimplicial(int k, int cobound);
/// p -> (sk_0 Delta^p)^{*(power)} * X; cofaces include vertices in order, codegeneracies collapse.
CosimplicialObject join_power_cosimplicial(int power, const SimplicialComplex& x, int cobound);
/// (j_1, ..., j_k) -> sk_0 Delta^{j_1} * ... * sk_0 Delta^{j_k} * X.
CosimplicialObject multi_join_cosimplicial(int arity, const SimplicialComplex& x, int cobound);
enum class Family { skeleton, join_power, join_power_over };
/// The three named families: p -> sk_k Delta^p, p -> (sk_0 Delta^p)^{*(k+1)}, and
/// p -> (sk_0 Delta^p)^{*(k+1)} * X.
CosimplicialObject cosimplicial_family(Family kind, int k, const SimplicialComplex& x, int cobound);
std::string to_string(Family kind);
Family parse_family(const std::string& name);
/// Constant object at Y in every level, identity structure maps.
CosimplicialObject constant_cosimplicial(const SimplicialComplex& y, std::vector<int> cobounds);
/// p -> Z^{p+1} as a discrete complex: pointed maps out of Hom([p],[1]) based at the
/// constant map to 1, with the basepoint of Z at index `basepoint`.
CosimplicialObject cech_cosimplicial(int points, int basepoint, int cobound);
/// (a, b) -> A(a) x B(b).
CosimplicialObject external_product(const CosimplicialObject& a, const CosimplicialObject& b);

/// Coskeleton at level p in one direction: levels above p become the limit over the
/// surjections [m] ->> [p] of copies of level p.
CosimplicialObject coskeleton_direction(const CosimplicialObject& x, int dir, int p);
/// Coskeleton at level p in every direction.
CosimplicialObject coskeleton_all(const CosimplicialObject& x, int p);
/// Diagonal j -> X(j, ..., j) of an object of arity >= 2 with equal cobounds.
CosimplicialObject diagonal(const CosimplicialObject& x);

}  // namespace towerkit
