#include "towerkit/categories.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "towerkit/cosimplicial.hpp"
#include "towerkit/io.hpp"
#include "towerkit/normal_form.hpp"
#include "towerkit/sset.hpp"

namespace towerkit {

FiniteCategory FiniteCategory::build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                                     std::vector<int> identities, const std::function<int(int, int)>& compose) {
  FiniteCategory c;
  c.objects_ = std::move(objects);
  c.morphisms_ = std::move(morphisms);
  c.identities_ = std::move(identities);
  const std::size_t no = c.objects_.size(), nm = c.morphisms_.size();
  if (c.identities_.size() != no) throw InvariantError("category: one identity per object required");
  c.hom_.assign(no * no, {});
  for (std::size_t m = 0; m < nm; ++m) {
    const Morphism& f = c.morphisms_[m];
    if (f.src < 0 || f.tgt < 0 || f.src >= static_cast<int>(no) || f.tgt >= static_cast<int>(no))
      throw InvariantError("category: morphism endpoint out of range");
    c.hom_[static_cast<std::size_t>(f.src) * no + f.tgt].push_back(static_cast<int>(m));
  }
  for (std::size_t a = 0; a < no; ++a) {
    const int id = c.identities_[a];
    if (id < 0 || id >= static_cast<int>(nm) || c.morphisms_[id].src != static_cast<int>(a) ||
        c.morphisms_[id].tgt != static_cast<int>(a))
      throw InvariantError("category: bad identity for " + c.objects_[a]);
  }
  c.comp_.assign(nm * nm, -1);
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f)
      if (c.morphisms_[f].tgt == c.morphisms_[g].src) {
        const int h = compose(static_cast<int>(g), static_cast<int>(f));
        if (h < 0 || h >= static_cast<int>(nm) || c.morphisms_[h].src != c.morphisms_[f].src ||
            c.morphisms_[h].tgt != c.morphisms_[g].tgt)
          throw InvariantError("category: composite has wrong endpoints");
        c.comp_[g * nm + f] = h;
      }
  bool poset = true;
  for (std::size_t a = 0; a < no && poset; ++a)
    for (std::size_t b = 0; b < no && poset; ++b) {
      const auto& h = c.hom_[a * no + b];
      if (h.size() > 1) poset = false;
      if (a != b && !h.empty() && !c.hom_[b * no + a].empty()) poset = false;
    }
  c.poset_ = poset;
  return c;
}

int FiniteCategory::find_object(const std::string& label) const {
  for (int a = 0; a < object_count(); ++a)
    if (objects_[a] == label) return a;
  throw InvariantError("no object named " + label);
}

std::vector<std::vector<bool>> FiniteCategory::order() const {
  const int n = object_count();
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = !hom(a, b).empty();
  return leq;
}

std::vector<int> FiniteCategory::linear_extension() const {
  const int n = object_count();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0), out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && !hom(a, b).empty()) ++indeg[b];
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if (!done[v] && indeg[v] == 0) pick = v;
    if (pick < 0) return {};
    done[pick] = true;
    out.push_back(pick);
    for (int b = 0; b < n; ++b)
      if (b != pick && !hom(pick, b).empty()) --indeg[b];
  }
  return out;
}

std::optional<int> FiniteCategory::terminal_object() const {
  for (int t = 0; t < object_count(); ++t) {
    bool ok = true;
    for (int a = 0; a < object_count() && ok; ++a) ok = hom(a, t).size() == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<int> FiniteCategory::initial_object() const {
  for (int t = 0; t < object_count(); ++t) {
    bool ok = true;
    for (int a = 0; a < object_count() && ok; ++a) ok = hom(t, a).size() == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

void FiniteCategory::check() const {
  const int nm = morphism_count();
  for (int f = 0; f < nm; ++f) {
    const Morphism& m = morphisms_[f];
    if (compose(f, identity(m.src)) != f || compose(identity(m.tgt), f) != f)
      throw InvariantError("category: unit law fails for " + m.name);
  }
  for (int f = 0; f < nm; ++f)
    for (int b = 0; b < object_count(); ++b)
      for (int g : hom(morphisms_[f].tgt, b))
        for (int c = 0; c < object_count(); ++c)
          for (int h : hom(b, c))
            if (compose(h, compose(g, f)) != compose(compose(h, g), f))
              throw InvariantError("category: composition is not associative");
}

namespace {

std::string subset_label(const std::vector<int>& s) {
  std::string l = "{";
  for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + std::to_string(s[i]);
  return l + "}";
}

// Builds a poset category from object labels and a reflexive, transitive relation.
FiniteCategory poset_category(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(labels.size());
  std::vector<Morphism> ms;
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::vector<int> id_of(static_cast<std::size_t>(n * n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[a][b]) {
        id_of[a * n + b] = static_cast<int>(ms.size());
        if (a == b) ids[a] = static_cast<int>(ms.size());
        ms.push_back({a, b, a == b ? "id" + labels[a] : labels[a] + "<=" + labels[b], {}});
      }
  auto compose = [&](int g, int f) { return id_of[ms[f].src * n + ms[g].tgt]; };
  auto c = FiniteCategory::build(std::move(labels), ms, ids, compose);
  if (!c.is_poset()) throw InvariantError("relation is not a partial order");
  return c;
}

int monotone_morphism(const FiniteCategory& c, int a, int b, const Mono& m) {
  for (int f : c.hom(a, b))
    if (c.morphism(f).map == m) return f;
  throw InvariantError("no morphism " + mono_to_string(m) + " in " + c.object(a) + " -> " + c.object(b));
}

}  // namespace

FiniteCategory power_poset(int n, bool punctured) {
  if (n < 0) throw InvariantError("power_poset: n must be non-negative");
  std::vector<std::vector<int>> subsets;
  for (int size = punctured ? 1 : 0; size <= n + 1; ++size) {
    std::vector<bool> pick(static_cast<std::size_t>(n + 1), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<int> s;
      for (int i = 0; i <= n; ++i)
        if (pick[i]) s.push_back(i);
      subsets.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::vector<std::string> labels;
  for (const auto& s : subsets) labels.push_back(subset_label(s));
  const std::size_t k = subsets.size();
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      leq[a][b] = std::includes(subsets[b].begin(), subsets[b].end(), subsets[a].begin(), subsets[a].end());
  auto c = poset_category(labels, leq);
  c.set_shape(FiniteCategory::Shape::power_poset, n);
  return c;
}

FiniteCategory truncated_simplex_category(int n) {
  if (n < 0) throw InvariantError("truncated_simplex_category: n must be non-negative");
  std::vector<std::string> labels;
  for (int j = 0; j <= n; ++j) labels.push_back("[" + std::to_string(j) + "]");
  std::vector<Morphism> ms;
  std::vector<int> ids(static_cast<std::size_t>(n + 1));
  std::map<std::pair<int, Mono>, int> by_map;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (const Mono& m : all_monotone(a, b)) {
        const int id = static_cast<int>(ms.size());
        if (a == b && m == identity_map(a)) ids[a] = id;
        by_map[{b, m}] = id;
        ms.push_back({a, b, mono_to_string(m), m});
      }
  auto compose = [&](int g, int f) { return by_map.at({ms[g].tgt, towerkit::compose(ms[g].map, ms[f].map)}); };
  auto c = FiniteCategory::build(labels, ms, ids, compose);
  c.set_shape(FiniteCategory::Shape::simplex, n);
  return c;
}

FiniteCategory discrete_category(int count) {
  std::vector<std::string> labels;
  for (int i = 0; i < count; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(count), std::vector<bool>(static_cast<std::size_t>(count)));
  for (int i = 0; i < count; ++i) leq[i][i] = true;
  return poset_category(labels, leq);
}

FiniteCategory chain_category(int count) {
  std::vector<std::string> labels;
  for (int i = 0; i < count; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(count), std::vector<bool>(static_cast<std::size_t>(count)));
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j) leq[i][j] = true;
  return poset_category(labels, leq);
}

std::vector<int> subset_of(const FiniteCategory& c, int object) {
  if (c.shape() != FiniteCategory::Shape::power_poset) throw InvariantError("subset_of: not a power poset");
  std::vector<int> s;
  std::istringstream in(c.object(object).substr(1, c.object(object).size() - 2));
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) s.push_back(std::stoi(item));
  return s;
}

void FunctorBetween::check() const {
  const FiniteCategory& c = *source;
  const FiniteCategory& d = *target;
  if (static_cast<int>(on_objects.size()) != c.object_count() ||
      static_cast<int>(on_morphisms.size()) != c.morphism_count())
    throw InvariantError("functor: map sizes do not match the source");
  for (int f = 0; f < c.morphism_count(); ++f) {
    const Morphism& m = c.morphism(f);
    const Morphism& gm = d.morphism(on_morphisms[f]);
    if (gm.src != on_objects[m.src] || gm.tgt != on_objects[m.tgt])
      throw InvariantError("functor: morphism " + m.name + " has wrong endpoints");
  }
  for (int a = 0; a < c.object_count(); ++a)
    if (on_morphisms[c.identity(a)] != d.identity(on_objects[a]))
      throw InvariantError("functor: identity of " + c.object(a) + " not preserved");
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      const int h = c.compose(g, f);
      if (h >= 0 && on_morphisms[h] != d.compose(on_morphisms[g], on_morphisms[f]))
        throw InvariantError("functor: composition not preserved");
    }
}

FunctorBetween identity_functor(CategoryPtr c) {
  FunctorBetween f{c, c, {}, {}};
  for (int a = 0; a < c->object_count(); ++a) f.on_objects.push_back(a);
  for (int m = 0; m < c->morphism_count(); ++m) f.on_morphisms.push_back(m);
  return f;
}

FunctorBetween poset_functor(CategoryPtr source, CategoryPtr target, std::vector<int> on_objects) {
  if (!source->is_poset() || !target->is_poset()) throw InvariantError("poset_functor: posets required");
  FunctorBetween f{source, target, std::move(on_objects), {}};
  for (int m = 0; m < source->morphism_count(); ++m) {
    const Morphism& mm = source->morphism(m);
    const auto& h = target->hom(f.on_objects.at(mm.src), f.on_objects.at(mm.tgt));
    if (h.empty()) throw InvariantError("poset_functor: object map is not order preserving");
    f.on_morphisms.push_back(h[0]);
  }
  f.check();
  return f;
}

FunctorBetween c_functor(int n) {
  auto src = std::make_shared<const FiniteCategory>(power_poset(n, true));
  auto tgt = std::make_shared<const FiniteCategory>(truncated_simplex_category(n));
  FunctorBetween f{src, tgt, {}, {}};
  for (int a = 0; a < src->object_count(); ++a) f.on_objects.push_back(static_cast<int>(subset_of(*src, a).size()) - 1);
  for (int m = 0; m < src->morphism_count(); ++m) {
    const Morphism& mm = src->morphism(m);
    const auto s = subset_of(*src, mm.src), t = subset_of(*src, mm.tgt);
    Mono inj;
    for (int e : s) inj.push_back(static_cast<int>(std::lower_bound(t.begin(), t.end(), e) - t.begin()));
    f.on_morphisms.push_back(monotone_morphism(*tgt, f.on_objects[mm.src], f.on_objects[mm.tgt], inj));
  }
  f.check();
  return f;
}

FunctorBetween simplex_inclusion(int m, int n) {
  if (m > n) throw InvariantError("simplex_inclusion: m > n");
  auto src = std::make_shared<const FiniteCategory>(truncated_simplex_category(m));
  auto tgt = std::make_shared<const FiniteCategory>(truncated_simplex_category(n));
  FunctorBetween f{src, tgt, {}, {}};
  for (int a = 0; a <= m; ++a) f.on_objects.push_back(a);
  for (int k = 0; k < src->morphism_count(); ++k) {
    const Morphism& mm = src->morphism(k);
    f.on_morphisms.push_back(monotone_morphism(*tgt, mm.src, mm.tgt, mm.map));
  }
  f.check();
  return f;
}

SimplicialSet nerve(const FiniteCategory& c, int bound) {
  if (c.is_poset()) {
    const auto order = c.linear_extension();
    std::vector<std::string> labels;
    const int n = c.object_count();
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
      labels.push_back(c.object(order[i]));
      for (int j = 0; j < n; ++j) leq[i][j] = !c.hom(order[i], order[j]).empty();
    }
    SimplicialComplex k = poset_nerve(labels, leq);
    return complex_to_sset(k, bound < 0 ? -1 : std::max(bound, k.dimension()));
  }
  if (bound < 0) throw InvariantError("nerve: a bound is required for a category with non-identity endomorphisms or cycles");
  // Keys: the object for degree 0, the composable string (f_1, ..., f_n) otherwise.
  auto obj_at = [&c](int n, const Key& x, int j) {
    if (n == 0) return static_cast<int>(x[0]);
    return j < n ? c.morphism(x[j]).src : c.morphism(x[n - 1]).tgt;
  };
  SimplexSource src;
  src.enumerate = [&c](int n) {
    std::vector<Key> out;
    if (n == 0) {
      for (int a = 0; a < c.object_count(); ++a) out.push_back(make_key({a}));
      return out;
    }
    std::vector<std::vector<int>> strings;
    for (int f = 0; f < c.morphism_count(); ++f) strings.push_back({f});
    for (int len = 2; len <= n; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& s : strings)
        for (int b = 0; b < c.object_count(); ++b)
          for (int g : c.hom(c.morphism(s.back()).tgt, b)) {
            auto t = s;
            t.push_back(g);
            next.push_back(std::move(t));
          }
      strings = std::move(next);
    }
    for (const auto& s : strings) out.push_back(make_key(s));
    return out;
  };
  src.face = [&c](int n, const Key& x, int i) {
    if (n == 1) return make_key({i == 0 ? c.morphism(x[0]).tgt : c.morphism(x[0]).src});
    std::vector<int> v = key_values(x);
    if (i == 0) {
      v.erase(v.begin());
    } else if (i == n) {
      v.pop_back();
    } else {
      v[i - 1] = c.compose(v[i], v[i - 1]);
      v.erase(v.begin() + i);
    }
    return make_key(v);
  };
  src.degeneracy = [&c, obj_at](int n, const Key& x, int j) {
    if (n == 0) return make_key({c.identity(x[0])});
    std::vector<int> v = key_values(x);
    v.insert(v.begin() + j, c.identity(obj_at(n, x, j)));
    return make_key(v);
  };
  src.label = [&c](int n, const Key& x) {
    if (n == 0) return c.object(x[0]);
    std::string l;
    for (std::size_t i = 0; i < x.size(); ++i) l += (i ? "," : "") + c.morphism(x[i]).name;
    return l;
  };
  return normalize(src, bound, false, Limits{}, "nerve").set;
}

std::string to_string(CommaSide side) { return side == CommaSide::over ? "over" : "under"; }

FiniteCategory comma(const FunctorBetween& g, int alpha, CommaSide side) {
  const FiniteCategory& c = *g.source;
  const FiniteCategory& d = *g.target;
  struct Obj {
    int c;
    int f;
  };
  std::vector<Obj> objs;
  std::vector<std::string> labels;
  for (int a = 0; a < c.object_count(); ++a) {
    const auto& h = side == CommaSide::over ? d.hom(g.on_objects[a], alpha) : d.hom(alpha, g.on_objects[a]);
    for (int f : h) {
      objs.push_back({a, f});
      labels.push_back("(" + c.object(a) + "," + d.morphism(f).name + ")");
    }
  }
  std::vector<Morphism> ms;
  std::vector<int> ids(objs.size(), -1);
  std::map<std::tuple<int, int, int>, int> by_triple;
  for (std::size_t x = 0; x < objs.size(); ++x)
    for (std::size_t y = 0; y < objs.size(); ++y)
      for (int u : c.hom(objs[x].c, objs[y].c)) {
        const int gu = g.on_morphisms[u];
        const bool ok = side == CommaSide::over ? d.compose(objs[y].f, gu) == objs[x].f
                                                : d.compose(gu, objs[x].f) == objs[y].f;
        if (!ok) continue;
        const int id = static_cast<int>(ms.size());
        if (x == y && u == c.identity(objs[x].c)) ids[x] = id;
        by_triple[{static_cast<int>(x), static_cast<int>(y), u}] = id;
        ms.push_back({static_cast<int>(x), static_cast<int>(y), c.morphism(u).name, c.morphism(u).map});
      }
  // Underlying source morphism of each comma morphism.
  std::vector<int> under;
  for (std::size_t x = 0; x < objs.size(); ++x)
    for (std::size_t y = 0; y < objs.size(); ++y)
      for (int u : c.hom(objs[x].c, objs[y].c))
        if (by_triple.count({static_cast<int>(x), static_cast<int>(y), u})) under.push_back(u);
  auto compose = [&](int gg, int ff) {
    return by_triple.at({ms[ff].src, ms[gg].tgt, c.compose(under[gg], under[ff])});
  };
  return FiniteCategory::build(labels, ms, ids, compose);
}

std::string to_string(CofinalityMode mode) {
  return mode == CofinalityMode::comma_nerve ? "comma_nerve" : "delta_shaped";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::contractible_certified:
      return "contractible-certified";
    case Verdict::homology_trivial_through_bound:
      return "homology-trivial-through-bound";
    case Verdict::obstructed:
      return "obstructed";
  }
  return "?";
}

bool CofinalityReport::all_trivial() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict != Verdict::obstructed; });
}

nlohmann::ordered_json CofinalityReport::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = towerkit::to_string(mode);
  j["side"] = towerkit::to_string(side);
  j["bound"] = bound;
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json x;
    x["object"] = e.object;
    x["cells"] = e.cells;
    x["certificate"] = e.certificate;
    x["homology"] = homology_to_json(e.homology);
    x["verdict"] = towerkit::to_string(e.verdict);
    es.push_back(x);
  }
  j["entries"] = es;
  j["all_trivial"] = all_trivial();
  return j;
}

namespace {

void judge(CofinalityEntry& e, const SimplicialSet& s, int bound) {
  e.cells = s.cell_counts();
  e.homology = homology(s, bound, true);
  if (e.certificate.empty())
    e.verdict = e.homology.trivial() ? Verdict::homology_trivial_through_bound : Verdict::obstructed;
  else
    e.verdict = Verdict::contractible_certified;
}

}  // namespace

CofinalityReport cofinality_report(const FunctorBetween& g, CofinalityMode mode, int bound, CommaSide side,
                                   const Limits& limits) {
  g.check();
  CofinalityReport r;
  r.mode = mode;
  r.side = side;
  r.bound = bound;
  const FiniteCategory& d = *g.target;
  if (mode == CofinalityMode::comma_nerve) {
    for (int alpha = 0; alpha < d.object_count(); ++alpha) {
      CofinalityEntry e;
      e.object = d.object(alpha);
      FiniteCategory k = comma(g, alpha, side);
      if (auto t = k.terminal_object()) e.certificate = "terminal " + k.object(*t);
      else if (auto i = k.initial_object()) e.certificate = "initial " + k.object(*i);
      judge(e, nerve(k, k.is_poset() ? -1 : bound + 1), bound);
      r.entries.push_back(std::move(e));
    }
    return r;
  }
  const FiniteCategory& c = *g.source;
  if (c.shape() != FiniteCategory::Shape::simplex)
    throw UnsupportedError("delta_shaped cofinality needs a truncated simplex category as source");
  const int m = c.shape_parameter();
  if (bound + 1 > m) throw BoundError(bound + 1, m, "delta_shaped cofinality (source truncated)");
  std::vector<std::vector<int>> coface(static_cast<std::size_t>(m + 1)), codeg(static_cast<std::size_t>(m + 1));
  for (int k = 1; k <= m; ++k)
    for (int i = 0; i <= k; ++i) coface[k].push_back(g.on_morphisms[monotone_morphism(c, k - 1, k, coface_map(k, i))]);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j <= k; ++j)
      codeg[k].push_back(g.on_morphisms[monotone_morphism(c, k + 1, k, codegeneracy_map(k, j))]);
  for (int alpha = 0; alpha < d.object_count(); ++alpha) {
    CofinalityEntry e;
    e.object = d.object(alpha);
    SimplexSource src;
    src.enumerate = [&](int n) {
      std::vector<Key> out;
      for (int f : d.hom(g.on_objects[n], alpha)) out.push_back(make_key({f}));
      return out;
    };
    src.face = [&](int n, const Key& x, int i) { return make_key({d.compose(x[0], coface[n][i])}); };
    src.degeneracy = [&](int n, const Key& x, int j) { return make_key({d.compose(x[0], codeg[n][j])}); };
    src.label = [&](int, const Key& x) { return d.morphism(x[0]).name; };
    judge(e, normalize(src, bound + 1, false, limits, "Hom(G[-], " + e.object + ")").set, bound);
    r.entries.push_back(std::move(e));
  }
  return r;
}

nlohmann::ordered_json category_to_json(const FiniteCategory& c) {
  nlohmann::ordered_json j;
  j["objects"] = c.objects();
  nlohmann::ordered_json ms = nlohmann::ordered_json::array();
  for (int m = 0; m < c.morphism_count(); ++m) {
    const Morphism& mm = c.morphism(m);
    nlohmann::ordered_json x{{"src", mm.src}, {"tgt", mm.tgt}, {"id", mm.name}};
    if (!mm.map.empty()) x["map"] = mm.map;
    ms.push_back(x);
  }
  j["morphisms"] = ms;
  std::vector<int> ids;
  for (int a = 0; a < c.object_count(); ++a) ids.push_back(c.identity(a));
  j["identities"] = ids;
  nlohmann::ordered_json comp = nlohmann::ordered_json::array();
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      const int h = c.compose(g, f);
      if (h >= 0 && !c.is_identity(g) && !c.is_identity(f)) comp.push_back({g, f, h});
    }
  j["comp"] = comp;
  return j;
}

FiniteCategory category_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
    std::vector<Morphism> ms;
    for (const auto& m : j.at("morphisms")) {
      Morphism mm{m.at("src").get<int>(), m.at("tgt").get<int>(), m.value("id", std::string{}), {}};
      if (m.contains("map")) mm.map = m.at("map").get<Mono>();
      ms.push_back(mm);
    }
    std::vector<int> ids;
    if (j.contains("identities")) {
      ids = j.at("identities").get<std::vector<int>>();
    } else {
      // Identities: the endomorphisms not listed as a non-identity composite factor.
      ids.assign(objects.size(), -1);
      std::vector<bool> nonid(ms.size(), false);
      for (const auto& t : j.at("comp")) nonid[t.at(0).get<int>()] = nonid[t.at(1).get<int>()] = true;
      for (std::size_t m = 0; m < ms.size(); ++m)
        if (ms[m].src == ms[m].tgt && !nonid[m] && ids[ms[m].src] < 0) ids[ms[m].src] = static_cast<int>(m);
    }
    std::map<std::pair<int, int>, int> table;
    for (const auto& t : j.at("comp")) table[{t.at(0).get<int>(), t.at(1).get<int>()}] = t.at(2).get<int>();
    std::vector<bool> is_id(ms.size(), false);
    for (int id : ids)
      if (id >= 0 && id < static_cast<int>(ms.size())) is_id[id] = true;
    auto compose = [&](int g, int f) {
      if (is_id[g]) return f;
      if (is_id[f]) return g;
      auto it = table.find({g, f});
      if (it == table.end())
        throw ParseError("category JSON: missing composite of " + std::to_string(g) + " after " + std::to_string(f), 0);
      return it->second;
    };
    auto c = FiniteCategory::build(objects, ms, ids, compose);
    c.check();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("category JSON: ") + e.what(), 0);
  }
}

FunctorSpec FunctorSpec::identity() { return FunctorSpec{}; }

FunctorSpec FunctorSpec::constant(std::string name, SimplicialComplex y) {
  FunctorSpec f;
  f.steps_.push_back({Kind::constant, std::move(name), std::move(y)});
  return f;
}

FunctorSpec FunctorSpec::join_with(std::string name, SimplicialComplex a) {
  FunctorSpec f;
  f.steps_.push_back({Kind::join_with, std::move(name), std::move(a)});
  return f;
}

FunctorSpec FunctorSpec::then(const FunctorSpec& next) const {
  FunctorSpec f = *this;
  f.steps_.insert(f.steps_.end(), next.steps_.begin(), next.steps_.end());
  return f;
}

FunctorSpec FunctorSpec::parse(const std::string& text,
                               const std::function<SimplicialComplex(const std::string&)>& resolve) {
  FunctorSpec f;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    if (item == "identity" || item == "id") {
    } else if (item.rfind("const:", 0) == 0) {
      f = f.then(constant(item.substr(6), resolve(item.substr(6))));
    } else if (item.rfind("join:", 0) == 0) {
      f = f.then(join_with(item.substr(5), resolve(item.substr(5))));
    } else {
      throw ParseError("unknown functor step '" + item + "'", pos);
    }
    pos = end + 1;
  }
  return f;
}

std::string FunctorSpec::to_string() const {
  if (steps_.empty()) return "identity";
  std::string s;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    s += i ? "," : "";
    s += (steps_[i].kind == Kind::constant ? "const:" : steps_[i].kind == Kind::join_with ? "join:" : "identity");
    if (steps_[i].kind != Kind::identity) s += steps_[i].name;
  }
  return s;
}

SimplicialComplex FunctorSpec::apply(const SimplicialComplex& z) const {
  SimplicialComplex cur = z;
  for (const auto& s : steps_) {
    if (s.kind == Kind::constant) cur = s.arg;
    else if (s.kind == Kind::join_with) cur = join(cur, s.arg);
  }
  return cur;
}

VertexMap FunctorSpec::apply(const VertexMap& f, const SimplicialComplex& dom, const SimplicialComplex& tgt) const {
  VertexMap cur = f;
  SimplicialComplex d = dom, t = tgt;
  for (const auto& s : steps_) {
    if (s.kind == Kind::constant) {
      cur = identity_vertex_map(s.arg.vertex_count());
      d = t = s.arg;
    } else if (s.kind == Kind::join_with) {
      cur = join_map(cur, t.vertex_count(), identity_vertex_map(s.arg.vertex_count()));
      d = join(d, s.arg);
      t = join(t, s.arg);
    }
  }
  return cur;
}

void DiagramSpec::check() const {
  const FiniteCategory& c = *index;
  if (static_cast<int>(values.size()) != c.object_count() || static_cast<int>(maps.size()) != c.morphism_count())
    throw InvariantError("diagram: sizes do not match the index category");
  for (int m = 0; m < c.morphism_count(); ++m) {
    const Morphism& mm = c.morphism(m);
    if (!is_simplicial_map(values[mm.src], values[mm.tgt], maps[m]))
      throw InvariantError("diagram: map " + mm.name + " is not simplicial");
    if (c.is_identity(m) && maps[m] != identity_vertex_map(values[mm.src].vertex_count()))
      throw InvariantError("diagram: identity not preserved at " + c.object(mm.src));
  }
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      const int h = c.compose(g, f);
      if (h >= 0 && maps[h] != compose_maps(maps[g], maps[f]))
        throw InvariantError("diagram: composition not preserved");
    }
}

DiagramSpec diagram_from_join(const FunctorSpec& f, const SimplicialComplex& x, CategoryPtr index) {
  DiagramSpec d{index, {}, {}};
  const FiniteCategory& c = *index;
  std::vector<SimplicialComplex> raw;
  std::vector<VertexMap> raw_maps;
  if (c.shape() == FiniteCategory::Shape::power_poset) {
    for (int a = 0; a < c.object_count(); ++a) {
      std::vector<std::string> labels;
      for (int e : subset_of(c, a)) labels.push_back(std::to_string(e));
      raw.push_back(join_all({SimplicialComplex::from_facets(labels, {}), x}, {"a0.", "x."}));
    }
    for (int m = 0; m < c.morphism_count(); ++m) {
      const Morphism& mm = c.morphism(m);
      const auto s = subset_of(c, mm.src), t = subset_of(c, mm.tgt);
      VertexMap v;
      for (int e : s) v.push_back(static_cast<int>(std::lower_bound(t.begin(), t.end(), e) - t.begin()));
      for (int i = 0; i < x.vertex_count(); ++i) v.push_back(static_cast<int>(t.size()) + i);
      raw_maps.push_back(v);
    }
  } else if (c.shape() == FiniteCategory::Shape::simplex) {
    const CosimplicialObject y = join_power_cosimplicial(1, x, c.shape_parameter());
    for (int a = 0; a < c.object_count(); ++a) raw.push_back(y.level(a));
    for (int m = 0; m < c.morphism_count(); ++m) {
      const Morphism& mm = c.morphism(m);
      raw_maps.push_back(y.structure(0, {mm.src}, mm.map, mm.tgt));
    }
  } else {
    throw UnsupportedError("diagram_from_join needs a power poset or a truncated simplex category");
  }
  for (const auto& r : raw) d.values.push_back(f.apply(r));
  for (int m = 0; m < c.morphism_count(); ++m) {
    const Morphism& mm = c.morphism(m);
    d.maps.push_back(f.apply(raw_maps[m], raw[mm.src], raw[mm.tgt]));
  }
  d.check();
  return d;
}

}  // namespace towerkit
