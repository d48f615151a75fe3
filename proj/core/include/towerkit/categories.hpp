#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "towerkit/errors.hpp"
#include "towerkit/homalg.hpp"
#include "towerkit/monotone.hpp"
#include "towerkit/simplicial_complex.hpp"
#include "towerkit/simplicial_set.hpp"

namespace towerkit {

struct Morphism {
  int src = 0;
  int tgt = 0;
  std::string name;
  /// Underlying monotone map for morphisms of simplex categories, else empty.
  Mono map;
};

/// Finite category with an explicit composition table.
class FiniteCategory {
 public:
  enum class Shape { generic, power_poset, simplex };

  /// `compose(g, f)` returns the id of g o f for composable f : a -> b, g : b -> c.
  static FiniteCategory build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                              std::vector<int> identities, const std::function<int(int g, int f)>& compose);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object(int a) const { return objects_[a]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const Morphism& morphism(int m) const { return morphisms_[m]; }
  int identity(int a) const { return identities_[a]; }
  bool is_identity(int m) const { return identities_[morphisms_[m].src] == m; }
  /// g o f; -1 when not composable.
  int compose(int g, int f) const { return comp_[static_cast<std::size_t>(g) * morphisms_.size() + f]; }
  const std::vector<int>& hom(int a, int b) const { return hom_[static_cast<std::size_t>(a) * objects_.size() + b]; }
  int find_object(const std::string& label) const;

  bool is_poset() const { return poset_; }
  /// For posets: leq[a][b] iff a <= b.
  std::vector<std::vector<bool>> order() const;
  /// Objects listed so that every morphism goes forward; empty when none exists.
  std::vector<int> linear_extension() const;

  /// Objects with exactly one morphism from (terminal) or to (initial) every object.
  std::optional<int> terminal_object() const;
  std::optional<int> initial_object() const;

  /// Exhaustive associativity and unit check; throws InvariantError.
  void check() const;

  Shape shape() const { return shape_; }
  int shape_parameter() const { return shape_n_; }
  void set_shape(Shape s, int n) {
    shape_ = s;
    shape_n_ = n;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<int> comp_;
  std::vector<std::vector<int>> hom_;
  bool poset_ = false;
  Shape shape_ = Shape::generic;
  int shape_n_ = -1;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// Subsets of {0..n} (nonempty ones when punctured) under inclusion, listed by
/// size then lexicographically.
FiniteCategory power_poset(int n, bool punctured);
/// Objects [0..n], morphisms all monotone maps.
FiniteCategory truncated_simplex_category(int n);
/// Discrete category on `count` objects.
FiniteCategory discrete_category(int count);
/// The chain 0 < 1 < ... < count-1.
FiniteCategory chain_category(int count);
/// Subset of the elements of a power poset object label, e.g. "{0,2}" -> {0, 2}.
std::vector<int> subset_of(const FiniteCategory& c, int object);

struct FunctorBetween {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;

  /// Identities and composition preserved; throws InvariantError.
  void check() const;
};

FunctorBetween identity_functor(CategoryPtr c);
/// Functor between posets determined by an order-preserving object map.
FunctorBetween poset_functor(CategoryPtr source, CategoryPtr target, std::vector<int> on_objects);
/// S -> [#S - 1], inclusions to the monotone injection [#S-1] = S c S' = [#S'-1].
FunctorBetween c_functor(int n);
/// Inclusion of the simplex category truncated at m into the one truncated at n >= m.
FunctorBetween simplex_inclusion(int m, int n);

/// Nerve through `bound` (unbounded posets: bound -1 means the full nerve).
/// Throws InvariantError for a non-poset without a bound.
SimplicialSet nerve(const FiniteCategory& c, int bound);

enum class CommaSide { over, under };
std::string to_string(CommaSide side);

/// (G | alpha) for over, (alpha | G) for under. Objects are labelled "(c,f)".
FiniteCategory comma(const FunctorBetween& g, int alpha, CommaSide side);

enum class CofinalityMode { delta_shaped, comma_nerve };
enum class Verdict { contractible_certified, homology_trivial_through_bound, obstructed };
std::string to_string(CofinalityMode mode);
std::string to_string(Verdict v);

struct CofinalityEntry {
  std::string object;
  std::vector<std::size_t> cells;  ///< nondegenerate cells per degree of the tested set
  HomologyResult homology;
  std::string certificate;  ///< "terminal (x)" / "initial (x)" / "" when none
  Verdict verdict = Verdict::obstructed;
};

struct CofinalityReport {
  CofinalityMode mode = CofinalityMode::comma_nerve;
  CommaSide side = CommaSide::over;
  int bound = 0;
  std::vector<CofinalityEntry> entries;

  bool all_trivial() const;
  nlohmann::ordered_json to_json() const;
};

/// Per target object: the comma-category nerve (comma_nerve) or the simplicial set
/// [k] -> Hom(G[k], alpha) (delta_shaped, source must be a truncated simplex
/// category), its reduced homology through `bound`, and a verdict.
CofinalityReport cofinality_report(const FunctorBetween& g, CofinalityMode mode, int bound,
                                   CommaSide side = CommaSide::over, const Limits& limits = {});

nlohmann::ordered_json category_to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const nlohmann::json& j);

/// A functor from complexes to complexes built from identity, constant(Y) and
/// joinWith(A) steps, applied first to last.
class FunctorSpec {
 public:
  enum class Kind { identity, constant, join_with };
  struct Step {
    Kind kind;
    std::string name;
    SimplicialComplex arg;
  };

  FunctorSpec() = default;
  static FunctorSpec identity();
  static FunctorSpec constant(std::string name, SimplicialComplex y);
  static FunctorSpec join_with(std::string name, SimplicialComplex a);
  FunctorSpec then(const FunctorSpec& next) const;

  /// Comma-separated steps: "identity", "const:<name>", "join:<name>".
  static FunctorSpec parse(const std::string& text,
                           const std::function<SimplicialComplex(const std::string&)>& resolve);
  std::string to_string() const;

  SimplicialComplex apply(const SimplicialComplex& z) const;
  VertexMap apply(const VertexMap& f, const SimplicialComplex& dom, const SimplicialComplex& tgt) const;
  const std::vector<Step>& steps() const { return steps_; }

 private:
  std::vector<Step> steps_;
};

/// Functor from a finite category to complexes.
struct DiagramSpec {
  CategoryPtr index;
  std::vector<SimplicialComplex> values;
  std::vector<VertexMap> maps;  ///< per morphism

  /// Every map simplicial, identities to identities, composites to composites.
  void check() const;
};

/// U -> F(U * X) over a power poset (U as a discrete complex), or
/// [j] -> F(sk_0 Delta^j * X) over a truncated simplex category.
DiagramSpec diagram_from_join(const FunctorSpec& f, const SimplicialComplex& x, CategoryPtr index);

}  // namespace towerkit
