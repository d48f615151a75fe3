#include "towerkit/cosimplicial.hpp"

#include <algorithm>
#include <tuple>

#include "towerkit/errors.hpp"
#include "towerkit/tuple_complex.hpp"

namespace towerkit {

using Index = CosimplicialObject::Index;

namespace {

Index with(Index j, int dir, int value) {
  j[dir] = value;
  return j;
}

std::string tuple_label(const std::vector<int>& t) {
  std::string l = "(";
  for (std::size_t i = 0; i < t.size(); ++i) l += (i ? "," : "") + std::to_string(t[i]);
  return l + ")";
}

}  // namespace

CosimplicialObject::CosimplicialObject(int arity, std::vector<int> cobounds) : cobounds_(std::move(cobounds)) {
  if (arity < 1 || static_cast<int>(cobounds_.size()) != arity) throw InvariantError("cosimplicial: bad arity");
  for (int c : cobounds_)
    if (c < 0) throw InvariantError("cosimplicial: negative cobound");
}

std::vector<Index> CosimplicialObject::indices() const {
  std::vector<Index> out;
  Index j(cobounds_.size(), 0);
  while (true) {
    out.push_back(j);
    int d = arity() - 1;
    while (d >= 0 && j[d] == cobounds_[d]) j[d--] = 0;
    if (d < 0) break;
    ++j[d];
  }
  return out;
}

const SimplicialComplex& CosimplicialObject::level(const Index& j) const {
  auto it = levels_.find(j);
  if (it == levels_.end()) throw BoundError(j.empty() ? 0 : *std::max_element(j.begin(), j.end()),
                                            cobounds_.empty() ? -1 : cobounds_[0], "cosimplicial level");
  return it->second;
}

const VertexMap& CosimplicialObject::coface(int dir, const Index& target, int i) const {
  auto it = cofaces_.find({dir, target, i});
  if (it == cofaces_.end()) throw BoundError(target[dir], cobounds_[dir], "coface");
  return it->second;
}

const VertexMap& CosimplicialObject::codegeneracy(int dir, const Index& target, int j) const {
  auto it = codegeneracies_.find({dir, target, j});
  if (it == codegeneracies_.end()) throw BoundError(target[dir] + 1, cobounds_[dir], "codegeneracy");
  return it->second;
}

VertexMap CosimplicialObject::structure(int dir, const Index& source, const Mono& theta, int target_degree) const {
  VertexMap m = identity_vertex_map(level(source).vertex_count());
  Index cur = source;
  for (const auto& step : elementary_factors(theta, target_degree)) {
    cur[dir] = step.target;
    const VertexMap& g = step.coface ? coface(dir, cur, step.index) : codegeneracy(dir, cur, step.index);
    m = compose_maps(g, m);
  }
  return m;
}

void CosimplicialObject::validate() const {
  auto fail = [](const std::string& m) { throw InvariantError("cosimplicial identity violated: " + m); };
  for (const auto& [k, m] : cofaces_)
    if (!is_simplicial_map(level(with(k.target, k.dir, k.target[k.dir] - 1)), level(k.target), m))
      fail("coface is not simplicial");
  for (const auto& [k, m] : codegeneracies_)
    if (!is_simplicial_map(level(with(k.target, k.dir, k.target[k.dir] + 1)), level(k.target), m))
      fail("codegeneracy is not simplicial");
  for (const Index& j : indices()) {
    for (int d = 0; d < arity(); ++d) {
      const int a = j[d];
      for (int b = 0; b <= cobounds_[d]; ++b) {
        for (const Mono& theta : all_monotone(a, b)) {
          VertexMap base = structure(d, j, theta, b);
          if (b + 1 <= cobounds_[d])
            for (int i = 0; i <= b + 1; ++i) {
              VertexMap lhs = structure(d, j, compose(coface_map(b + 1, i), theta), b + 1);
              if (lhs != compose_maps(coface(d, with(j, d, b + 1), i), base)) fail("coface relation in direction " + std::to_string(d));
            }
          if (b >= 1)
            for (int i = 0; i < b; ++i) {
              VertexMap lhs = structure(d, j, compose(codegeneracy_map(b - 1, i), theta), b - 1);
              if (lhs != compose_maps(codegeneracy(d, with(j, d, b - 1), i), base))
                fail("codegeneracy relation in direction " + std::to_string(d));
            }
        }
      }
      // Directions commute on generators.
      for (int e = d + 1; e < arity(); ++e) {
        auto gens = [&](int dir, const Index& src) {
          std::vector<std::pair<Mono, int>> g;
          const int t = src[dir];
          if (t + 1 <= cobounds_[dir])
            for (int i = 0; i <= t + 1; ++i) g.push_back({coface_map(t + 1, i), t + 1});
          if (t >= 1)
            for (int i = 0; i < t; ++i) g.push_back({codegeneracy_map(t - 1, i), t - 1});
          return g;
        };
        for (const auto& [g1, t1] : gens(d, j))
          for (const auto& [g2, t2] : gens(e, j)) {
            VertexMap one = compose_maps(structure(e, with(j, d, t1), g2, t2), structure(d, j, g1, t1));
            VertexMap two = compose_maps(structure(d, with(j, e, t2), g1, t1), structure(e, j, g2, t2));
            if (one != two) fail("directions do not commute");
          }
      }
    }
  }
}

CosimplicialObject make_cosimplicial(
    std::vector<int> cobounds, const std::function<SimplicialComplex(const Index&)>& level,
    const std::function<VertexMap(int, const Index&, const Mono&, int)>& action) {
  CosimplicialObject x(static_cast<int>(cobounds.size()), cobounds);
  for (const Index& j : x.indices()) x.set_level(j, level(j));
  for (const Index& j : x.indices()) {
    for (int d = 0; d < x.arity(); ++d) {
      const int t = j[d];
      if (t >= 1)
        for (int i = 0; i <= t; ++i) x.set_coface(d, j, i, action(d, with(j, d, t - 1), coface_map(t, i), t));
      if (t + 1 <= cobounds[d])
        for (int i = 0; i <= t; ++i)
          x.set_codegeneracy(d, j, i, action(d, with(j, d, t + 1), codegeneracy_map(t, i), t));
    }
  }
  return x;
}

CosimplicialObject transform(
    const CosimplicialObject& x, const std::function<SimplicialComplex(const SimplicialComplex&)>& on_level,
    const std::function<VertexMap(const VertexMap&, const SimplicialComplex&, const SimplicialComplex&)>& on_map) {
  return make_cosimplicial(
      x.cobounds(), [&](const Index& j) { return on_level(x.level(j)); },
      [&](int dir, const Index& src, const Mono& theta, int t) {
        return on_map(x.structure(dir, src, theta, t), x.level(src), x.level(with(src, dir, t)));
      });
}

SimplicialComplex join_all(const std::vector<SimplicialComplex>& parts, const std::vector<std::string>& prefixes) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> faces{{}};
  int offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const SimplicialComplex& k = parts[p];
    for (const auto& l : k.labels()) labels.push_back(prefixes[p] + l);
    std::vector<std::vector<int>> part_faces{{}};
    for (int d = 0; d <= k.dimension(); ++d)
      for (const auto& f : k.faces(d)) part_faces.push_back(f);
    std::vector<std::vector<int>> next;
    next.reserve(faces.size() * part_faces.size());
    for (const auto& f : faces)
      for (const auto& g : part_faces) {
        std::vector<int> h = f;
        for (int v : g) h.push_back(v + offset);
        next.push_back(std::move(h));
      }
    faces = std::move(next);
    offset += k.vertex_count();
  }
  faces.erase(std::remove_if(faces.begin(), faces.end(), [](const auto& f) { return f.empty(); }), faces.end());
  return SimplicialComplex::from_faces(labels, faces);
}


namespace {

// Parts of a join of discrete simplices followed by X; the vertex offset of part t.
SimplicialComplex discrete_join(const std::vector<int>& sizes, const SimplicialComplex& x) {
  std::vector<SimplicialComplex> parts;
  std::vector<std::string> prefixes;
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    parts.push_back(discrete_complex(sizes[t]));
    prefixes.push_back("a" + std::to_string(t) + ".");
  }
  parts.push_back(x);
  prefixes.push_back(sizes.empty() ? "" : "x.");
  return join_all(parts, prefixes);
}

// Action of theta on the part `moving` of a discrete join; other parts are fixed.
VertexMap discrete_join_map(const std::vector<int>& sizes, int moving, const Mono& theta, int target,
                            int x_size) {
  VertexMap m;
  int offset = 0;
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    const int out = static_cast<int>(t) == moving ? target + 1 : sizes[t];
    for (int v = 0; v < sizes[t]; ++v) m.push_back(offset + (static_cast<int>(t) == moving ? theta[v] : v));
    offset += out;
  }
  for (int v = 0; v < x_size; ++v) m.push_back(offset + v);
  return m;
}

}  // namespace

CosimplicialObject skeleton_cosimplicial(int k, int cobound) {
  return make_cosimplicial(
      {cobound}, [&](const Index& j) { return simplex_complex(j[0], std::min(k, j[0])); },
      [](int, const Index&, const Mono& theta, int) { return VertexMap(theta.begin(), theta.end()); });
}

CosimplicialObject join_power_cosimplicial(int power, const SimplicialComplex& x, int cobound) {
  auto sizes = [power](int p) { return std::vector<int>(static_cast<std::size_t>(power), p + 1); };
  return make_cosimplicial(
      {cobound}, [&](const Index& j) { return discrete_join(sizes(j[0]), x); },
      [&](int, const Index& src, const Mono& theta, int t) {
        VertexMap m;
        const int a = src[0] + 1;
        for (int part = 0; part < power; ++part)
          for (int v = 0; v < a; ++v) m.push_back(part * (t + 1) + theta[v]);
        for (int v = 0; v < x.vertex_count(); ++v) m.push_back(power * (t + 1) + v);
        return m;
      });
}

CosimplicialObject multi_join_cosimplicial(int arity, const SimplicialComplex& x, int cobound) {
  auto sizes = [](const Index& j) {
    std::vector<int> s;
    for (int v : j) s.push_back(v + 1);
    return s;
  };
  return make_cosimplicial(
      std::vector<int>(static_cast<std::size_t>(arity), cobound),
      [&](const Index& j) { return discrete_join(sizes(j), x); },
      [&](int dir, const Index& src, const Mono& theta, int t) {
        return discrete_join_map(sizes(src), dir, theta, t, x.vertex_count());
      });
}

CosimplicialObject cosimplicial_family(Family kind, int k, const SimplicialComplex& x, int cobound) {
  if (k < 0) throw InvariantError("family parameter k must be non-negative");
  switch (kind) {
    case Family::skeleton:
      return skeleton_cosimplicial(k, cobound);
    case Family::join_power:
      return join_power_cosimplicial(k + 1, empty_complex(), cobound);
    case Family::join_power_over:
      return join_power_cosimplicial(k + 1, x, cobound);
  }
  throw InvariantError("unknown family");
}

std::string to_string(Family kind) {
  switch (kind) {
    case Family::skeleton:
      return "Xk";
    case Family::join_power:
      return "Yk";
    case Family::join_power_over:
      return "sk0-join-power";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "Xk") return Family::skeleton;
  if (name == "Yk") return Family::join_power;
  if (name == "sk0-join-power") return Family::join_power_over;
  throw UnsupportedError("unknown cosimplicial family '" + name + "'");
}

CosimplicialObject constant_cosimplicial(const SimplicialComplex& y, std::vector<int> cobounds) {
  return make_cosimplicial(
      std::move(cobounds), [&](const Index&) { return y; },
      [&](int, const Index&, const Mono&, int) { return identity_vertex_map(y.vertex_count()); });
}

CosimplicialObject cech_cosimplicial(int points, int basepoint, int cobound) {
  if (points < 1 || basepoint < 0 || basepoint >= points) throw InvariantError("cech: bad basepoint");
  // Level p: tuples z in Z^{p+1}; z[t-1] is the value at the map with threshold t.
  auto tuples = [points](int p) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i <= p; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& t : out)
        for (int z = 0; z < points; ++z) {
          auto u = t;
          u.push_back(z);
          next.push_back(std::move(u));
        }
      out = std::move(next);
    }
    return out;
  };
  auto encode = [points](const std::vector<int>& t) {
    int c = 0;
    for (int z : t) c = c * points + z;
    return c;
  };
  return make_cosimplicial(
      {cobound},
      [&](const Index& j) {
        std::vector<std::string> labels;
        std::vector<std::vector<int>> faces;
        for (const auto& t : tuples(j[0])) {
          faces.push_back({static_cast<int>(labels.size())});
          labels.push_back(tuple_label(t));
        }
        return SimplicialComplex::from_faces(labels, faces);
      },
      [&](int, const Index& src, const Mono& theta, int b) {
        const int a = src[0];
        VertexMap m;
        for (const auto& z : tuples(a)) {
          std::vector<int> w;
          for (int tp = 1; tp <= b + 1; ++tp) {
            int u = a + 1;
            for (int s = 0; s <= a; ++s)
              if (theta[s] >= tp) {
                u = s;
                break;
              }
            w.push_back(u == 0 ? basepoint : z[u - 1]);
          }
          m.push_back(encode(w));
        }
        return m;
      });
}

CosimplicialObject external_product(const CosimplicialObject& a, const CosimplicialObject& b) {
  if (a.arity() != 1 || b.arity() != 1) throw UnsupportedError("external product of plain cosimplicial objects only");
  return make_cosimplicial(
      {a.cobound(0), b.cobound(0)}, [&](const Index& j) { return product(a.level(j[0]), b.level(j[1])); },
      [&](int dir, const Index& src, const Mono& theta, int t) {
        const int na = a.level(src[0]).vertex_count(), nb = b.level(src[1]).vertex_count();
        if (dir == 0)
          return product_map(a.structure(0, {src[0]}, theta, t), a.level(t).vertex_count(), identity_vertex_map(nb),
                             nb, nb);
        const int nbt = b.level(t).vertex_count();
        return product_map(identity_vertex_map(na), na, b.structure(0, {src[1]}, theta, t), nbt, nb);
      });
}

namespace {

// Limit levels of a coskeleton in one direction.
class CoskeletonBuilder {
 public:
  CoskeletonBuilder(const CosimplicialObject& x, int dir, int p) : x_(x), dir_(dir), p_(p) {
    if (p < 0 || p > x.cobound(dir)) throw InvariantError("coskeleton: level out of range");
    for (const Index& j : x.indices())
      if (j[dir] > p) build(j);
  }

  SimplicialComplex level(const Index& j) const {
    if (j[dir_] <= p_) return x_.level(j);
    return limits_.at(j).complex;
  }

  VertexMap action(int dir, const Index& src, const Mono& theta, int t) const {
    const Index tgt = with(src, dir, t);
    const int n = level(src).vertex_count();
    if (dir != dir_) {
      if (src[dir_] <= p_) return x_.structure(dir, src, theta, t);
      // Componentwise on the limit.
      const Index base = with(src, dir_, p_);
      const VertexMap g = x_.structure(dir, base, theta, t);
      const Limit& from = limits_.at(src);
      const Limit& to = limits_.at(tgt);
      VertexMap m;
      for (const auto& y : from.tuples) {
        std::vector<int> z;
        for (int v : y) z.push_back(g[v]);
        m.push_back(to.find(z));
      }
      return m;
    }
    VertexMap m;
    for (int v = 0; v < n; ++v) {
      if (t <= p_) {
        m.push_back(value(src, v, theta, t));
      } else {
        const Limit& to = limits_.at(tgt);
        std::vector<int> z;
        for (const Mono& s : to.surjections) z.push_back(value(src, v, compose(s, theta), p_));
        m.push_back(to.find(z));
      }
    }
    return m;
  }

 private:
  struct Limit {
    std::vector<Mono> surjections;
    std::vector<std::vector<int>> tuples;
    SimplicialComplex complex;
    int find(const std::vector<int>& z) const {
      auto it = std::lower_bound(tuples.begin(), tuples.end(), z);
      if (it == tuples.end() || *it != z) throw InvariantError("coskeleton: image is not a compatible family");
      return static_cast<int>(it - tuples.begin());
    }
  };

  const VertexMap& cached(const Index& src, const Mono& phi, int j) const {
    auto key = std::make_tuple(src, phi, j);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, x_.structure(dir_, src, phi, j)).first;
    return it->second;
  }

  // Image of vertex v of level src under phi : [src_dir] -> [j] with j <= p.
  int value(const Index& src, int v, const Mono& phi, int j) const {
    const int a = src[dir_];
    if (a <= p_) return cached(src, phi, j)[v];
    // phi = psi o theta with theta : [a] ->> [p] among the indexing surjections.
    const EpiMono em = epi_mono(phi);
    Mono theta = em.epi;
    int r = em.epi.empty() ? -1 : em.epi.back();
    // Refine the epi to [p] by cutting at the lowest admissible positions.
    while (r < p_) {
      for (int s = 1; s <= a; ++s)
        if (theta[s] == theta[s - 1]) {
          for (int u = s; u <= a; ++u) ++theta[u];
          break;
        }
      ++r;
    }
    Mono psi(static_cast<std::size_t>(p_ + 1));
    for (int s = 0; s <= a; ++s) psi[theta[s]] = phi[s];
    const Limit& lim = limits_.at(src);
    const int idx = static_cast<int>(std::lower_bound(lim.surjections.begin(), lim.surjections.end(), theta) -
                                     lim.surjections.begin());
    const int y = lim.tuples[v][idx];
    return cached(with(src, dir_, p_), psi, j)[y];
  }

  void build(const Index& j) {
    const int m = j[dir_];
    const Index base = with(j, dir_, p_);
    const SimplicialComplex& comp = x_.level(base);
    Limit lim;
    lim.surjections = all_surjections(m, p_);
    const int s = static_cast<int>(lim.surjections.size());
    // Pairs (t1 < t2) with maps that must agree: phi1 theta1 = phi2 theta2 landing in [q], q <= p.
    struct Constraint {
      int t1, t2;
      VertexMap f1, f2;
    };
    std::vector<std::vector<Constraint>> by_last(static_cast<std::size_t>(s));
    for (int q = 0; q <= p_; ++q) {
      const auto phis = all_monotone(p_, q);
      for (int t1 = 0; t1 < s; ++t1)
        for (int t2 = t1 + 1; t2 < s; ++t2)
          for (const Mono& f1 : phis)
            for (const Mono& f2 : phis)
              if (compose(f1, lim.surjections[t1]) == compose(f2, lim.surjections[t2]))
                by_last[t2].push_back({t1, t2, x_.structure(dir_, base, f1, q), x_.structure(dir_, base, f2, q)});
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
      const int t = static_cast<int>(cur.size());
      if (t == s) {
        lim.tuples.push_back(cur);
        return;
      }
      for (int v = 0; v < comp.vertex_count(); ++v) {
        bool ok = true;
        for (const auto& c : by_last[t])
          if (c.f1[cur[c.t1]] != c.f2[v]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(v);
        self(self);
        cur.pop_back();
      }
    };
    rec(rec);
    std::vector<const SimplicialComplex*> comps(static_cast<std::size_t>(s), &comp);
    lim.complex = tuple_complex(comps, lim.tuples);
    limits_.emplace(j, std::move(lim));
  }

  const CosimplicialObject& x_;
  int dir_;
  int p_;
  std::map<Index, Limit> limits_;
  mutable std::map<std::tuple<Index, Mono, int>, VertexMap> cache_;
};

}  // namespace

CosimplicialObject coskeleton_direction(const CosimplicialObject& x, int dir, int p) {
  CoskeletonBuilder b(x, dir, p);
  return make_cosimplicial(
      x.cobounds(), [&](const Index& j) { return b.level(j); },
      [&](int d, const Index& src, const Mono& theta, int t) { return b.action(d, src, theta, t); });
}

CosimplicialObject coskeleton_all(const CosimplicialObject& x, int p) {
  CosimplicialObject out = x;
  for (int d = 0; d < x.arity(); ++d) out = coskeleton_direction(out, d, std::min(p, x.cobound(d)));
  return out;
}

CosimplicialObject diagonal(const CosimplicialObject& x) {
  if (x.arity() < 2) throw InvariantError("diagonal needs arity >= 2");
  for (int c : x.cobounds())
    if (c != x.cobound(0)) throw InvariantError("diagonal needs equal cobounds");
  const int k = x.arity();
  auto uniform = [k](int j) { return Index(static_cast<std::size_t>(k), j); };
  return make_cosimplicial(
      {x.cobound(0)}, [&](const Index& j) { return x.level(uniform(j[0])); },
      [&](int, const Index& src, const Mono& theta, int t) {
        Index cur = uniform(src[0]);
        VertexMap m = identity_vertex_map(x.level(cur).vertex_count());
        for (int d = 0; d < k; ++d) {
          m = compose_maps(x.structure(d, cur, theta, t), m);
          cur[d] = t;
        }
        return m;
      });
}

}  // namespace towerkit
