#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "towerkit/categories.hpp"
#include "towerkit/cosimplicial.hpp"
#include "towerkit/errors.hpp"
#include "towerkit/homalg.hpp"
#include "towerkit/normal_form.hpp"
#include "towerkit/simplicial_complex.hpp"

namespace towerkit {

/// Expression for the domain of one end object in degree n: built from Delta^n,
/// fixed per-object complexes (slots), products and barycentric subdivision.
class Shape {
 public:
  static Shape var();
  static Shape slot(int index);
  static Shape product(const Shape& a, const Shape& b);
  static Shape subdivide(const Shape& a, int times);

  /// sd^N(slot_0 x Delta^n), the usual weighted domain.
  static Shape weighted(int ex_depth);

  SimplicialComplex complex(int n, const std::vector<SimplicialComplex>& slots) const;
  /// Vertex map induced by theta : [m] -> [n] on Delta and by slot maps.
  VertexMap map(int m, int n, const Mono& theta, const std::vector<SimplicialComplex>& dom_slots,
                const std::vector<SimplicialComplex>& tgt_slots, const std::vector<VertexMap>& slot_maps) const;

  std::string to_string() const;

 private:
  enum class Op { var, slot, product, subdivide };
  struct Node {
    Op op;
    int value;  ///< slot index or subdivision count
    std::shared_ptr<const Node> a, b;
  };
  explicit Shape(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  struct Eval {
    SimplicialComplex dom, tgt;
    VertexMap map;
  };
  static SimplicialComplex complex_of(const Node& n, int deg, const std::vector<SimplicialComplex>& slots);
  static Eval eval(const Node& n, int m, int deg, const Mono& theta, const std::vector<SimplicialComplex>& ds,
                   const std::vector<SimplicialComplex>& ts, const std::vector<VertexMap>& maps);
};

/// An end: degree-n cells are families f_i : shape_i(n) -> value_i with
/// value_map(u) . f_src = f_tgt . shape(u) for every listed arrow u.
struct EndProblem {
  struct Object {
    std::string name;
    Shape shape;
    std::vector<SimplicialComplex> slots;
    SimplicialComplex value;
  };
  struct Arrow {
    int src;
    int tgt;
    std::vector<VertexMap> slot_maps;
    VertexMap value_map;
  };
  std::string what;
  std::vector<Object> objects;
  std::vector<Arrow> arrows;

  int find(const std::string& name) const;
};

/// The computed end through a degree, with the key of every cell.
class EndResult {
 public:
  EndResult(EndProblem problem, int through, const Limits& limits);

  const EndProblem& problem() const { return problem_; }
  const SimplicialSet& set() const { return nf_.set; }
  const NormalForm& normal_form() const { return nf_; }
  int through() const { return through_; }
  /// Number of domain vertices of object i in degree n.
  int block_size(int object, int n) const;

  /// Restriction to an end over a subset of the objects with the same shapes and
  /// values (matched by name).
  SimplicialMap restrict_to(const EndResult& sub) const;

 private:
  struct Cache;
  EndProblem problem_;
  int through_;
  NormalForm nf_;
  std::vector<std::vector<int>> block_sizes_;  ///< [object][n]
};

/// Homotopy limit over a poset index: weights are the nerves of the down-sets,
/// values are replaced by Ex^N through the subdivision adjunction.
EndProblem holim_poset_problem(const DiagramSpec& d, int ex_depth);
/// Tot_s of a cosimplicial object: weights Delta^m, m <= s.
EndProblem tot_problem(const CosimplicialObject& x, int s, int ex_depth);
/// Iterated Tot of a multi-cosimplicial object truncated at `truncation[d]`
/// in direction d. `nesting` lists directions from the innermost end outward; the
/// outermost carries Delta^n.
EndProblem nested_tot_problem(const CosimplicialObject& x, const std::vector<int>& truncation,
                              const std::vector<int>& nesting, int ex_depth);

struct HolimOutcome {
  std::optional<EndResult> result;
  int bound = -1;  ///< homology degree reached
  HomologyResult homology;
  bool capped = false;
  std::string note;
};

/// Computes the end through bound + 1 and its homology through bound, falling back to
/// lower bounds on CapExceeded (down to `min_bound`); capped when none fits.
HolimOutcome compute_holim(const EndProblem& p, int bound, const Limits& limits, int min_bound = 0);

SimplicialSet holim_poset(const DiagramSpec& d, int bound, int ex_depth, const Limits& limits);
SimplicialSet tot(const CosimplicialObject& x, int s, int bound, int ex_depth, const Limits& limits);

enum class Model { poset, cosimplicial };
std::string to_string(Model m);

/// T_n F(X) in either model. `bound` is a homology degree; cells go through bound + 1.
EndProblem T_n_problem(const FunctorSpec& f, const SimplicialComplex& x, int n, Model model, int ex_depth);
/// T_n^k F(X): the diagonal of the coskeleton of the k-fold join object, totalized at nk.
EndProblem T_n_k_problem(const FunctorSpec& f, const SimplicialComplex& x, int n, int k, int ex_depth);
/// T_n^k F(X) by applying the cosimplicial T_n construction k times.
EndProblem T_n_k_iterated_problem(const FunctorSpec& f, const SimplicialComplex& x, int n, int k, int ex_depth);

struct TowerStage {
  int n = 0;
  bool capped = false;
  int bound = -1;
  std::vector<std::size_t> cells;
  HomologyResult homology;
};

struct TowerMap {
  int from = 0;  ///< stage n
  int to = 0;    ///< stage n - 1
  std::vector<std::vector<int>> h0;  ///< components of `to` by components of `from`
  std::vector<int> ranks;            ///< rank of H_d for d = 0..bound, -1 when not computed
};

struct TowerReport {
  std::string functor;
  std::string space;
  int k = 0;
  int bound = 0;
  int ex_depth = 0;
  std::vector<TowerStage> stages;
  std::vector<TowerMap> maps;
  /// H_0 matrices of the two-step restrictions equal the product of one-step ones.
  std::optional<bool> composition_ok;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

/// Row k of the tower: stages T_n^{k+1} F(X) for n in [n_min, n_max], with the
/// restriction maps to the previous stage. Row 0 uses the cosimplicial model, rows
/// k >= 1 the iterated model (whose stage inclusions are key projections).
TowerReport tower_report(const FunctorSpec& f, const std::string& space_name, const SimplicialComplex& x, int k,
                         int n_min, int n_max, int bound, int ex_depth, const Limits& limits);

struct PartialHolimReport {
  int p = 0, q = 0, bound = 0;
  HolimOutcome left, right;
  std::vector<bool> equal;  ///< per degree 0..bound
  bool agree() const;
  nlohmann::ordered_json to_json() const;
};

/// Iterated Tot (direction 0 at p outside direction 1 at q) against Tot_{p+q} of the
/// diagonal of the coskeleton at (p, q). The object needs cobounds >= p + q.
PartialHolimReport partial_holim_check(const CosimplicialObject& b, int p, int q, int bound, const Limits& limits);

struct Stabilization {
  HolimOutcome at_n, at_next;
  std::string verdict;  ///< "stable", "unstable" or "capped"
};
/// Compares homology through the bound at ex depth N and N + 1.
Stabilization ex_stabilization(const std::function<EndProblem(int)>& build, int ex_depth, int bound,
                               const Limits& limits);

}  // namespace towerkit
