#include "towerkit/holim.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "towerkit/hom.hpp"
#include "towerkit/io.hpp"

namespace towerkit {

// Shape ----------------------------------------------------------------------

namespace {

// Subdivided domains beyond this many vertices are out of reach for the enumerator.
constexpr std::size_t kMaxDomainVertices = 20000;

SimplicialComplex guarded_subdivision(const SimplicialComplex& c) {
  if (c.total_faces() > kMaxDomainVertices)
    throw CapExceeded("subdivided end domain (" + std::to_string(c.total_faces()) + " vertices)", c.dimension(),
                      kMaxDomainVertices);
  return subdivision(c);
}

}  // namespace

Shape Shape::var() { return Shape(std::make_shared<const Node>(Node{Op::var, 0, nullptr, nullptr})); }
Shape Shape::slot(int index) { return Shape(std::make_shared<const Node>(Node{Op::slot, index, nullptr, nullptr})); }
Shape Shape::product(const Shape& a, const Shape& b) {
  return Shape(std::make_shared<const Node>(Node{Op::product, 0, a.node_, b.node_}));
}
Shape Shape::subdivide(const Shape& a, int times) {
  if (times <= 0) return a;
  return Shape(std::make_shared<const Node>(Node{Op::subdivide, times, a.node_, nullptr}));
}
Shape Shape::weighted(int ex_depth) { return subdivide(product(slot(0), var()), ex_depth); }

SimplicialComplex Shape::complex_of(const Node& n, int deg, const std::vector<SimplicialComplex>& slots) {
  switch (n.op) {
    case Op::var:
      return simplex_complex(deg);
    case Op::slot:
      return slots.at(n.value);
    case Op::product:
      return towerkit::product(complex_of(*n.a, deg, slots), complex_of(*n.b, deg, slots));
    case Op::subdivide: {
      SimplicialComplex c = complex_of(*n.a, deg, slots);
      for (int t = 0; t < n.value; ++t) c = guarded_subdivision(c);
      return c;
    }
  }
  throw InvariantError("shape: bad node");
}

Shape::Eval Shape::eval(const Node& n, int m, int deg, const Mono& theta, const std::vector<SimplicialComplex>& ds,
                        const std::vector<SimplicialComplex>& ts, const std::vector<VertexMap>& maps) {
  switch (n.op) {
    case Op::var:
      return {simplex_complex(m), simplex_complex(deg), VertexMap(theta.begin(), theta.end())};
    case Op::slot:
      return {ds.at(n.value), ts.at(n.value), maps.at(n.value)};
    case Op::product: {
      Eval a = eval(*n.a, m, deg, theta, ds, ts, maps);
      Eval b = eval(*n.b, m, deg, theta, ds, ts, maps);
      VertexMap f = product_map(a.map, a.tgt.vertex_count(), b.map, b.tgt.vertex_count(), b.dom.vertex_count());
      return {towerkit::product(a.dom, b.dom), towerkit::product(a.tgt, b.tgt), std::move(f)};
    }
    case Op::subdivide: {
      Eval e = eval(*n.a, m, deg, theta, ds, ts, maps);
      for (int t = 0; t < n.value; ++t) {
        e.map = subdivision_map(e.dom, e.tgt, e.map);
        e.dom = guarded_subdivision(e.dom);
        e.tgt = guarded_subdivision(e.tgt);
      }
      return e;
    }
  }
  throw InvariantError("shape: bad node");
}

SimplicialComplex Shape::complex(int n, const std::vector<SimplicialComplex>& slots) const {
  return complex_of(*node_, n, slots);
}

VertexMap Shape::map(int m, int n, const Mono& theta, const std::vector<SimplicialComplex>& dom_slots,
                     const std::vector<SimplicialComplex>& tgt_slots, const std::vector<VertexMap>& slot_maps) const {
  return eval(*node_, m, n, theta, dom_slots, tgt_slots, slot_maps).map;
}

std::string Shape::to_string() const {
  std::function<std::string(const Node&)> rec = [&](const Node& n) -> std::string {
    switch (n.op) {
      case Op::var:
        return "D";
      case Op::slot:
        return "W" + std::to_string(n.value);
      case Op::product:
        return "(" + rec(*n.a) + " x " + rec(*n.b) + ")";
      case Op::subdivide:
        return "sd^" + std::to_string(n.value) + rec(*n.a);
    }
    return "?";
  };
  return rec(*node_);
}

int EndProblem::find(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i].name == name) return static_cast<int>(i);
  return -1;
}

// End computation --------------------------------------------------------------

struct EndResult::Cache {
  const EndProblem& p;
  std::vector<std::map<int, SimplicialComplex>> domains;
  std::map<std::tuple<int, int, int, Mono>, VertexMap> maps;

  explicit Cache(const EndProblem& problem) : p(problem), domains(problem.objects.size()) {}

  const SimplicialComplex& domain(int i, int n) {
    auto it = domains[i].find(n);
    if (it == domains[i].end())
      it = domains[i].emplace(n, p.objects[i].shape.complex(n, p.objects[i].slots)).first;
    return it->second;
  }

  // D_i(theta) for theta : [m] -> [n].
  const VertexMap& structure(int i, int m, int n, const Mono& theta) {
    auto key = std::make_tuple(i, m, n, theta);
    auto it = maps.find(key);
    if (it == maps.end()) {
      const auto& o = p.objects[i];
      std::vector<VertexMap> ids;
      for (const auto& s : o.slots) ids.push_back(identity_vertex_map(s.vertex_count()));
      it = maps.emplace(key, o.shape.map(m, n, theta, o.slots, o.slots, ids)).first;
    }
    return it->second;
  }

  VertexMap arrow(int a, int n) {
    const auto& u = p.arrows[a];
    const auto& s = p.objects[u.src];
    const auto& t = p.objects[u.tgt];
    return s.shape.map(n, n, identity_map(n), s.slots, t.slots, u.slot_maps);
  }
};

EndResult::EndResult(EndProblem problem, int through, const Limits& limits)
    : problem_(std::move(problem)), through_(through) {
  Cache cache(problem_);
  const int objs = static_cast<int>(problem_.objects.size());
  block_sizes_.assign(static_cast<std::size_t>(objs), {});
  for (int n = 0; n <= through; ++n)
    for (int i = 0; i < objs; ++i) {
      try {
        block_sizes_[i].push_back(cache.domain(i, n).vertex_count());
      } catch (const CapExceeded& e) {
        throw CapExceeded(e.where(), n, e.cap());
      }
    }
  auto offsets = [this, objs](int n) {
    std::vector<int> off(static_cast<std::size_t>(objs + 1), 0);
    for (int i = 0; i < objs; ++i) off[i + 1] = off[i] + block_sizes_[i][n];
    return off;
  };
  for (int i = 0; i < objs; ++i)
    for (int n = 0; n <= through; ++n)
      if (block_sizes_[i][n] >= 65536 || offsets(n)[objs] >= (1 << 24))
        throw CapExceeded(problem_.what + " domain of " + problem_.objects[i].name, n, limits.cap);

  // Precompose every block with D_i(theta).
  auto act = [&](int m, int n, const Mono& theta, const Key& x) {
    const auto on = offsets(n);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(offsets(m)[objs]));
    for (int i = 0; i < objs; ++i) {
      const VertexMap& g = cache.structure(i, m, n, theta);
      for (int v : g) out.push_back(x[on[i] + v]);
    }
    return make_key(out);
  };

  SimplexSource src;
  src.enumerate = [&](int n) {
    VertexProblem vp;
    std::vector<int> off;
    for (int i = 0; i < objs; ++i) off.push_back(vp.add_block(cache.domain(i, n), problem_.objects[i].value));
    for (std::size_t a = 0; a < problem_.arrows.size(); ++a) {
      const auto& u = problem_.arrows[a];
      const VertexMap b = cache.arrow(static_cast<int>(a), n);
      for (std::size_t v = 0; v < b.size(); ++v)
        vp.push_link(off[u.src] + static_cast<int>(v), off[u.tgt] + b[v], u.value_map);
    }
    return vp.solve(limits, problem_.what, n);
  };
  src.face = [&](int n, const Key& x, int i) { return act(n - 1, n, coface_map(n, i), x); };
  src.degeneracy = [&](int n, const Key& x, int j) { return act(n + 1, n, codegeneracy_map(n, j), x); };
  nf_ = normalize(src, through, false, limits, problem_.what);
}

int EndResult::block_size(int object, int n) const { return block_sizes_.at(object).at(n); }

SimplicialMap EndResult::restrict_to(const EndResult& sub) const {
  const int top = std::min(through_, sub.through_);
  std::vector<int> which;
  for (const auto& o : sub.problem_.objects) {
    const int i = problem_.find(o.name);
    if (i < 0) throw InvariantError("restriction: object " + o.name + " missing");
    if (!(problem_.objects[i].value == o.value)) throw InvariantError("restriction: values differ at " + o.name);
    which.push_back(i);
  }
  SimplicialMap f;
  f.image.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    std::vector<int> off(problem_.objects.size() + 1, 0);
    for (std::size_t i = 0; i < problem_.objects.size(); ++i) off[i + 1] = off[i] + block_sizes_[i][n];
    for (std::size_t s = 0; s < which.size(); ++s)
      if (sub.block_sizes_[s][n] != block_sizes_[which[s]][n])
        throw InvariantError("restriction: domains differ at " + sub.problem_.objects[s].name);
    f.image[n].resize(nf_.set.cell_count(n));
    for (const auto& [key, simplex] : nf_.forms[n]) {
      if (!simplex.nondegenerate()) continue;
      Key k;
      for (int i : which) k += key.substr(static_cast<std::size_t>(off[i]), static_cast<std::size_t>(block_sizes_[i][n]));
      f.image[n][simplex.cell] = sub.nf_.forms[n].at(k);
    }
  }
  return f;
}

// Presentations ------------------------------------------------------------------

EndProblem holim_poset_problem(const DiagramSpec& d, int ex_depth) {
  const FiniteCategory& c = *d.index;
  if (!c.is_poset()) throw InvariantError("holim_poset: index is not a poset");
  const auto order = c.linear_extension();
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  EndProblem p;
  p.what = "holim over poset";
  // Down-sets in linear-extension order, with each member's position.
  std::vector<std::vector<int>> down(order.size());
  for (int a : order) {
    for (int b : order)
      if (!c.hom(b, a).empty()) down[a].push_back(b);
    std::vector<std::string> labels;
    const std::size_t k = down[a].size();
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i) {
      labels.push_back(c.object(down[a][i]));
      for (std::size_t j = 0; j < k; ++j) leq[i][j] = !c.hom(down[a][i], down[a][j]).empty();
    }
    p.objects.push_back({c.object(a), Shape::weighted(ex_depth), {poset_nerve(labels, leq)}, d.values[a]});
  }
  for (int m = 0; m < c.morphism_count(); ++m) {
    const Morphism& mm = c.morphism(m);
    if (mm.src == mm.tgt) continue;
    bool covering = true;
    for (int z = 0; z < c.object_count() && covering; ++z)
      if (z != mm.src && z != mm.tgt && !c.hom(mm.src, z).empty() && !c.hom(z, mm.tgt).empty()) covering = false;
    if (!covering) continue;
    VertexMap w;
    for (int b : down[mm.src])
      w.push_back(static_cast<int>(std::find(down[mm.tgt].begin(), down[mm.tgt].end(), b) - down[mm.tgt].begin()));
    p.arrows.push_back({rank[mm.src], rank[mm.tgt], {w}, d.maps[m]});
  }
  return p;
}

namespace {

std::string index_name(const CosimplicialObject::Index& j) {
  if (j.size() == 1) return "[" + std::to_string(j[0]) + "]";
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
  return s + ")";
}

}  // namespace

EndProblem tot_problem(const CosimplicialObject& x, int s, int ex_depth) {
  if (x.arity() != 1) throw InvariantError("tot: plain cosimplicial object expected");
  return nested_tot_problem(x, {s}, {0}, ex_depth);
}

EndProblem nested_tot_problem(const CosimplicialObject& x, const std::vector<int>& truncation,
                              const std::vector<int>& nesting, int ex_depth) {
  const int k = x.arity();
  if (static_cast<int>(truncation.size()) != k || static_cast<int>(nesting.size()) != k)
    throw InvariantError("nested tot: one truncation and one nesting entry per direction");
  for (int d = 0; d < k; ++d)
    if (truncation[d] < 0 || truncation[d] > x.cobound(d)) throw BoundError(truncation[d], x.cobound(d), "tot truncation");
  Shape shape = Shape::var();
  for (auto it = nesting.rbegin(); it != nesting.rend(); ++it)
    shape = Shape::subdivide(Shape::product(Shape::slot(*it), shape), ex_depth);
  EndProblem p;
  p.what = k == 1 ? "Tot" : "iterated Tot";
  std::vector<CosimplicialObject::Index> idx;
  CosimplicialObject::Index j(static_cast<std::size_t>(k), 0);
  while (true) {
    idx.push_back(j);
    int d = k - 1;
    while (d >= 0 && j[d] == truncation[d]) j[d--] = 0;
    if (d < 0) break;
    ++j[d];
  }
  std::map<CosimplicialObject::Index, int> pos;
  for (const auto& J : idx) {
    pos[J] = static_cast<int>(p.objects.size());
    std::vector<SimplicialComplex> slots;
    for (int d = 0; d < k; ++d) slots.push_back(simplex_complex(J[d]));
    p.objects.push_back({index_name(J), shape, slots, x.level(J)});
  }
  for (const auto& J : idx)
    for (int d = 0; d < k; ++d) {
      auto slot_maps = [&](const CosimplicialObject::Index& src, const Mono& theta) {
        std::vector<VertexMap> m;
        for (int e = 0; e < k; ++e)
          m.push_back(e == d ? VertexMap(theta.begin(), theta.end()) : identity_vertex_map(src[e] + 1));
        return m;
      };
      const int t = J[d];
      if (t >= 1)
        for (int i = 0; i <= t; ++i) {
          auto src = J;
          --src[d];
          p.arrows.push_back({pos[src], pos[J], slot_maps(src, coface_map(t, i)), x.coface(d, J, i)});
        }
      if (t + 1 <= truncation[d])
        for (int i = 0; i <= t; ++i) {
          auto src = J;
          ++src[d];
          p.arrows.push_back({pos[src], pos[J], slot_maps(src, codegeneracy_map(t, i)), x.codegeneracy(d, J, i)});
        }
    }
  return p;
}

HolimOutcome compute_holim(const EndProblem& p, int bound, const Limits& limits, int min_bound) {
  HolimOutcome out;
  for (int b = bound; b >= min_bound;) {
    try {
      EndResult r(p, b + 1, limits);
      out.homology = homology(r.set(), b, true);
      out.bound = b;
      out.result.emplace(std::move(r));
      return out;
    } catch (const CapExceeded& e) {
      out.note += (out.note.empty() ? "" : "; ") + std::string("bound ") + std::to_string(b) + ": " + e.what();
      // Cells of degree e.degree() are out of reach, so bounds >= e.degree() - 1 fail too.
      b = std::min(b - 1, e.degree() - 2);
    }
  }
  out.capped = true;
  return out;
}

SimplicialSet holim_poset(const DiagramSpec& d, int bound, int ex_depth, const Limits& limits) {
  return EndResult(holim_poset_problem(d, ex_depth), bound, limits).set();
}

SimplicialSet tot(const CosimplicialObject& x, int s, int bound, int ex_depth, const Limits& limits) {
  return EndResult(tot_problem(x, s, ex_depth), bound, limits).set();
}

std::string to_string(Model m) { return m == Model::poset ? "poset" : "cosimplicial"; }

namespace {

CosimplicialObject apply_functor(const FunctorSpec& f, const CosimplicialObject& x) {
  return transform(
      x, [&](const SimplicialComplex& z) { return f.apply(z); },
      [&](const VertexMap& m, const SimplicialComplex& dom, const SimplicialComplex& tgt) { return f.apply(m, dom, tgt); });
}

}  // namespace

EndProblem T_n_problem(const FunctorSpec& f, const SimplicialComplex& x, int n, Model model, int ex_depth) {
  if (n < 0) throw InvariantError("T_n: n must be non-negative");
  EndProblem p;
  if (model == Model::poset) {
    auto index = std::make_shared<const FiniteCategory>(power_poset(n, true));
    p = holim_poset_problem(diagram_from_join(f, x, index), ex_depth);
  } else {
    p = tot_problem(apply_functor(f, join_power_cosimplicial(1, x, n)), n, ex_depth);
  }
  p.what = "T_" + std::to_string(n) + " (" + to_string(model) + ")";
  return p;
}

EndProblem T_n_k_problem(const FunctorSpec& f, const SimplicialComplex& x, int n, int k, int ex_depth) {
  if (n < 1 || k < 1) throw InvariantError("T_n^k: n, k >= 1 required");
  EndProblem p;
  if (k == 1) {
    p = tot_problem(coskeleton_direction(apply_functor(f, join_power_cosimplicial(1, x, n)), 0, n), n, ex_depth);
  } else {
    const CosimplicialObject m = apply_functor(f, multi_join_cosimplicial(k, x, n * k));
    p = tot_problem(diagonal(coskeleton_all(m, n)), n * k, ex_depth);
  }
  p.what = "T_" + std::to_string(n) + "^" + std::to_string(k) + " (diagonal of coskeleton)";
  return p;
}

EndProblem T_n_k_iterated_problem(const FunctorSpec& f, const SimplicialComplex& x, int n, int k, int ex_depth) {
  if (n < 0 || k < 1) throw InvariantError("T_n^k: n >= 0, k >= 1 required");
  const CosimplicialObject m = apply_functor(f, multi_join_cosimplicial(k, x, n));
  std::vector<int> nesting;
  for (int d = 0; d < k; ++d) nesting.push_back(d);
  EndProblem p = nested_tot_problem(m, std::vector<int>(static_cast<std::size_t>(k), n), nesting, ex_depth);
  p.what = "T_" + std::to_string(n) + "^" + std::to_string(k) + " (iterated)";
  return p;
}

// Towers ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> multiply(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<int>> c(a.size(), std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TowerReport tower_report(const FunctorSpec& f, const std::string& space_name, const SimplicialComplex& x, int k,
                         int n_min, int n_max, int bound, int ex_depth, const Limits& limits) {
  if (k < 0 || n_min < 0 || n_max < n_min) throw InvariantError("tower: bad range");
  TowerReport r;
  r.functor = f.to_string();
  r.space = space_name;
  r.k = k;
  r.bound = bound;
  r.ex_depth = ex_depth;
  std::vector<HolimOutcome> outcomes;
  for (int n = n_min; n <= n_max; ++n) {
    EndProblem p = k == 0 ? T_n_problem(f, x, n, Model::cosimplicial, ex_depth)
                          : T_n_k_iterated_problem(f, x, n, k + 1, ex_depth);
    HolimOutcome o = compute_holim(p, bound, limits);
    TowerStage s;
    s.n = n;
    s.capped = o.capped;
    s.bound = o.bound;
    if (o.result) {
      s.cells = o.result->set().cell_counts();
      s.homology = o.homology;
    }
    r.stages.push_back(s);
    outcomes.push_back(std::move(o));
  }
  std::vector<std::optional<SimplicialMap>> step(outcomes.size());
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (!outcomes[i].result || !outcomes[i - 1].result) continue;
    const EndResult& a = *outcomes[i].result;
    const EndResult& b = *outcomes[i - 1].result;
    SimplicialMap m = a.restrict_to(b);
    TowerMap tm;
    tm.from = r.stages[i].n;
    tm.to = r.stages[i - 1].n;
    tm.h0 = component_matrix(a.set(), b.set(), m);
    const int top = std::min(outcomes[i].bound, outcomes[i - 1].bound);
    for (int d = 0; d <= top; ++d) tm.ranks.push_back(induced_rank(a.set(), b.set(), m, d));
    r.maps.push_back(tm);
    step[i] = std::move(m);
  }
  for (std::size_t i = 2; i < outcomes.size(); ++i) {
    if (!step[i] || !step[i - 1] || !outcomes[i - 2].result) continue;
    const EndResult& a = *outcomes[i].result;
    const EndResult& c = *outcomes[i - 2].result;
    const auto direct = component_matrix(a.set(), c.set(), a.restrict_to(c));
    const auto m1 = component_matrix(a.set(), outcomes[i - 1].result->set(), *step[i]);
    const auto m2 = component_matrix(outcomes[i - 1].result->set(), c.set(), *step[i - 1]);
    const bool ok = multiply(m2, m1) == direct;
    r.composition_ok = r.composition_ok.value_or(true) && ok;
  }
  return r;
}

nlohmann::ordered_json TowerReport::to_json() const {
  nlohmann::ordered_json j;
  j["functor"] = functor;
  j["space"] = space;
  j["k"] = k;
  j["bound"] = bound;
  j["ex_depth"] = ex_depth;
  nlohmann::ordered_json st = nlohmann::ordered_json::array();
  for (const auto& s : stages) {
    nlohmann::ordered_json x;
    x["n"] = s.n;
    x["capped"] = s.capped;
    x["bound"] = s.bound;
    x["cells"] = s.cells;
    x["homology"] = s.capped ? nlohmann::ordered_json() : homology_to_json(s.homology);
    st.push_back(x);
  }
  j["stages"] = st;
  nlohmann::ordered_json ms = nlohmann::ordered_json::array();
  for (const auto& m : maps) ms.push_back({{"from", m.from}, {"to", m.to}, {"h0", m.h0}, {"ranks", m.ranks}});
  j["maps"] = ms;
  j["composition_ok"] = composition_ok ? nlohmann::ordered_json(*composition_ok) : nlohmann::ordered_json();
  return j;
}

std::string TowerReport::to_csv() const {
  std::ostringstream os;
  os << "stage,degree,reduced_betti,torsion,map_rank\n";
  for (const auto& s : stages) {
    if (s.capped) {
      os << s.n << ",,capped,,\n";
      continue;
    }
    const TowerMap* m = nullptr;
    for (const auto& t : maps)
      if (t.from == s.n) m = &t;
    for (const auto& g : s.homology.groups) {
      if (g.degree < 0) continue;
      os << s.n << "," << g.degree << "," << g.betti << ",";
      for (std::size_t i = 0; i < g.torsion.size(); ++i) os << (i ? ";" : "") << g.torsion[i].str();
      os << ",";
      if (m && g.degree < static_cast<int>(m->ranks.size())) os << m->ranks[g.degree];
      os << "\n";
    }
  }
  return os.str();
}

// Partial holim comparison -----------------------------------------------------------

bool PartialHolimReport::agree() const {
  return !equal.empty() && std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

namespace {

nlohmann::ordered_json outcome_json(const HolimOutcome& o) {
  nlohmann::ordered_json j;
  j["capped"] = o.capped;
  j["bound"] = o.bound;
  j["cells"] = o.result ? nlohmann::ordered_json(o.result->set().cell_counts()) : nlohmann::ordered_json();
  j["homology"] = o.result ? homology_to_json(o.homology) : nlohmann::ordered_json();
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

}  // namespace

nlohmann::ordered_json PartialHolimReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["q"] = q;
  j["bound"] = bound;
  j["iterated"] = outcome_json(left);
  j["diagonal"] = outcome_json(right);
  j["equal"] = equal;
  j["agree"] = agree();
  return j;
}

PartialHolimReport partial_holim_check(const CosimplicialObject& b, int p, int q, int bound, const Limits& limits) {
  if (b.arity() != 2) throw InvariantError("partial holim check needs a bicosimplicial object");
  if (b.cobound(0) < p + q || b.cobound(1) < p + q) throw BoundError(p + q, std::min(b.cobound(0), b.cobound(1)), "partial holim check");
  PartialHolimReport r;
  r.p = p;
  r.q = q;
  r.bound = bound;
  EndProblem left = nested_tot_problem(b, {p, q}, {1, 0}, 0);
  left.what = "iterated Tot";
  // Restrict to cobound p + q in both directions so the diagonal is defined.
  CosimplicialObject trimmed = make_cosimplicial(
      {p + q, p + q}, [&](const CosimplicialObject::Index& j) { return b.level(j); },
      [&](int d, const CosimplicialObject::Index& src, const Mono& theta, int t) { return b.structure(d, src, theta, t); });
  EndProblem right = tot_problem(diagonal(coskeleton_direction(coskeleton_direction(trimmed, 1, q), 0, p)), p + q, 0);
  right.what = "Tot of diagonal coskeleton";
  r.left = compute_holim(left, bound, limits, bound);
  r.right = compute_holim(right, bound, limits, bound);
  if (r.left.result && r.right.result)
    for (int d = 0; d <= bound; ++d) r.equal.push_back(r.left.homology.at(d) == r.right.homology.at(d));
  return r;
}

Stabilization ex_stabilization(const std::function<EndProblem(int)>& build, int ex_depth, int bound,
                               const Limits& limits) {
  Stabilization s;
  s.at_n = compute_holim(build(ex_depth), bound, limits);
  s.at_next = compute_holim(build(ex_depth + 1), bound, limits);
  if (s.at_n.capped || s.at_next.capped) {
    s.verdict = "capped";
    return s;
  }
  const int top = std::min(s.at_n.bound, s.at_next.bound);
  bool same = true;
  for (int d = -1; d <= top; ++d) same = same && s.at_n.homology.at(d) == s.at_next.homology.at(d);
  s.verdict = same ? "stable" : "unstable";
  return s;
}

}  // namespace towerkit
