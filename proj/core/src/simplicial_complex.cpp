#include "towerkit/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "towerkit/errors.hpp"
#include "towerkit/tuple_complex.hpp"

namespace towerkit {

namespace {

void add_subsets(const std::vector<int>& facet, std::set<std::vector<int>>& out) {
  const std::size_t n = facet.size();
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) s.push_back(facet[i]);
    out.insert(std::move(s));
  }
}

std::vector<std::string> default_labels(int n, const std::string& prefix) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back(prefix + std::to_string(i));
  return l;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> all;
  const int nv = static_cast<int>(labels.size());
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) continue;
    if (f.front() < 0 || f.back() >= nv) throw InvariantError("facet refers to an unknown vertex");
    if (f.size() > 62) throw UnsupportedError("facet too large");
    add_subsets(f, all);
  }
  for (int v = 0; v < nv; ++v) all.insert({v});
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  for (const auto& f : all) {
    std::size_t d = f.size() - 1;
    if (c.faces_.size() <= d) c.faces_.resize(d + 1);
    c.faces_[d].push_back(f);
  }
  for (auto& level : c.faces_) std::sort(level.begin(), level.end());
  c.build_index();
  return c;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> labels,
                                                const std::vector<std::vector<int>>& faces) {
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  std::set<std::vector<int>> all;
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvariantError("face with repeated vertex");
    if (f.empty()) continue;
    if (f.front() < 0 || f.back() >= c.vertex_count()) throw InvariantError("face refers to an unknown vertex");
    all.insert(f);
  }
  for (int v = 0; v < c.vertex_count(); ++v)
    if (!all.count({v})) throw InvariantError("vertex " + c.labels_[v] + " is not a face");
  for (const auto& f : all) {
    std::size_t d = f.size() - 1;
    if (c.faces_.size() <= d) c.faces_.resize(d + 1);
    c.faces_[d].push_back(f);
  }
  c.build_index();
  c.validate();
  return c;
}

void SimplicialComplex::build_index() {
  index_.clear();
  for (auto& level : faces_)
    for (std::size_t i = 0; i < level.size(); ++i) index_.emplace(level[i], static_cast<int>(i));
  const std::size_t n = labels_.size();
  adjacency_.assign(n * n, 0);
  for (std::size_t v = 0; v < n; ++v) adjacency_[v * n + v] = 1;
  if (faces_.size() > 1)
    for (const auto& e : faces_[1]) {
      adjacency_[static_cast<std::size_t>(e[0]) * n + static_cast<std::size_t>(e[1])] = 1;
      adjacency_[static_cast<std::size_t>(e[1]) * n + static_cast<std::size_t>(e[0])] = 1;
    }
}

const std::vector<std::vector<int>>& SimplicialComplex::faces(int d) const {
  static const std::vector<std::vector<int>> none;
  if (d < 0 || d > dimension()) return none;
  return faces_[d];
}

std::size_t SimplicialComplex::total_faces() const {
  std::size_t t = 0;
  for (const auto& l : faces_) t += l.size();
  return t;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& l : faces_) f.push_back(l.size());
  return f;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& f : faces_[d]) {
      bool maximal = true;
      if (d + 1 <= dimension()) {
        for (int v = 0; v < vertex_count() && maximal; ++v) {
          if (std::binary_search(f.begin(), f.end(), v)) continue;
          std::vector<int> g = f;
          g.insert(std::upper_bound(g.begin(), g.end(), v), v);
          if (contains(g)) maximal = false;
        }
      }
      if (maximal) out.push_back(f);
    }
  }
  return out;
}

int SimplicialComplex::face_index(std::span<const int> sorted) const {
  if (sorted.empty()) return -1;
  if (sorted.size() == 1) return sorted[0] >= 0 && sorted[0] < vertex_count() ? sorted[0] : -1;
  auto it = index_.find(std::vector<int>(sorted.begin(), sorted.end()));
  return it == index_.end() ? -1 : it->second;
}

bool SimplicialComplex::has_edge(int a, int b) const {
  const std::size_t n = labels_.size();
  return adjacency_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] != 0;
}

void SimplicialComplex::validate() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (!contains(std::vector<int>{v})) throw InvariantError("vertex " + labels_[v] + " is not a face");
  for (int d = 1; d <= dimension(); ++d) {
    for (const auto& f : faces_[d]) {
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> g;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != drop) g.push_back(f[i]);
        if (!contains(g)) throw InvariantError("face family is not downward closed");
      }
    }
  }
}

bool is_simplicial_map(const SimplicialComplex& dom, const SimplicialComplex& tgt, const VertexMap& f) {
  if (static_cast<int>(f.size()) != dom.vertex_count()) return false;
  for (int v : f)
    if (v < 0 || v >= tgt.vertex_count()) return false;
  for (int d = 1; d <= dom.dimension(); ++d) {
    for (const auto& face : dom.faces(d)) {
      std::vector<int> img;
      for (int v : face) img.push_back(f[v]);
      if (!std::is_sorted(img.begin(), img.end())) return false;
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (!tgt.contains(img)) return false;
    }
  }
  return true;
}

VertexMap compose_maps(const VertexMap& g, const VertexMap& f) {
  VertexMap out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[static_cast<std::size_t>(f[i])];
  return out;
}

VertexMap identity_vertex_map(int n) {
  VertexMap m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

SimplicialComplex point_complex() { return SimplicialComplex::from_facets({"*"}, {{0}}); }

SimplicialComplex empty_complex() { return SimplicialComplex::from_facets({}, {}); }

SimplicialComplex simplex_complex(int n, int k) {
  if (k < 0 || k > n) k = n;
  std::vector<int> all(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) all[i] = i;
  if (k == n) return SimplicialComplex::from_facets(default_labels(n + 1, ""), {all});
  std::vector<std::vector<int>> facets;
  for (std::uint64_t mask = 1; mask < (1ull << (n + 1)); ++mask) {
    if (std::popcount(mask) != k + 1) continue;
    std::vector<int> s;
    for (int i = 0; i <= n; ++i)
      if (mask & (1ull << i)) s.push_back(i);
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(default_labels(n + 1, ""), facets);
}

SimplicialComplex simplex_boundary(int n) { return simplex_complex(n, n - 1); }

SimplicialComplex discrete_complex(int points, const std::string& prefix) {
  return SimplicialComplex::from_facets(default_labels(points, prefix), {});
}

SimplicialComplex sphere0() { return SimplicialComplex::from_facets({"s-", "s+"}, {}); }

SimplicialComplex cycle_graph(int n) {
  std::vector<std::vector<int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_facets(default_labels(n, ""), e);
}

SimplicialComplex complete_graph(int n) { return simplex_complex(n - 1, std::min(1, n - 1)); }

SimplicialComplex complete_bipartite(int a, int b) {
  std::vector<std::string> labels;
  for (int i = 0; i < a; ++i) labels.push_back("a" + std::to_string(i));
  for (int j = 0; j < b; ++j) labels.push_back("b" + std::to_string(j));
  std::vector<std::vector<int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return SimplicialComplex::from_facets(labels, e);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b, LabelCollision on_collision) {
  std::set<std::string> seen(a.labels().begin(), a.labels().end());
  bool collision = false;
  for (const auto& l : b.labels())
    if (seen.count(l)) collision = true;
  if (collision && on_collision == LabelCollision::reject) throw InvariantError("join: vertex labels collide");
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(collision ? "L." + l : l);
  for (const auto& l : b.labels()) labels.push_back(collision ? "R." + l : l);
  const int off = a.vertex_count();
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> a_faces{{}}, b_faces{{}};
  for (int d = 0; d <= a.dimension(); ++d)
    for (const auto& f : a.faces(d)) a_faces.push_back(f);
  for (int d = 0; d <= b.dimension(); ++d)
    for (const auto& f : b.faces(d)) b_faces.push_back(f);
  for (const auto& fa : a_faces) {
    for (const auto& fb : b_faces) {
      if (fa.empty() && fb.empty()) continue;
      std::vector<int> f = fa;
      for (int v : fb) f.push_back(v + off);
      faces.push_back(std::move(f));
    }
  }
  return SimplicialComplex::from_faces(labels, faces);
}

VertexMap join_map(const VertexMap& f, int a_target_size, const VertexMap& g) {
  VertexMap out = f;
  for (int v : g) out.push_back(v + a_target_size);
  return out;
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("L." + l);
  for (const auto& l : b.labels()) labels.push_back("R." + l);
  std::vector<std::vector<int>> faces;
  for (int d = 0; d <= a.dimension(); ++d)
    for (const auto& f : a.faces(d)) faces.push_back(f);
  for (int d = 0; d <= b.dimension(); ++d)
    for (const auto& f : b.faces(d)) {
      std::vector<int> g;
      for (int v : f) g.push_back(v + a.vertex_count());
      faces.push_back(std::move(g));
    }
  return SimplicialComplex::from_faces(labels, faces);
}

SimplicialComplex wedge(const SimplicialComplex& a, const SimplicialComplex& b) {
  // b's vertex 0 becomes a's vertex 0; b's other vertices follow a's.
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("L." + l);
  for (int v = 1; v < b.vertex_count(); ++v) labels.push_back("R." + b.labels()[v]);
  auto relabel = [&](int v) { return v == 0 ? 0 : a.vertex_count() + v - 1; };
  std::vector<std::vector<int>> faces;
  for (int d = 0; d <= a.dimension(); ++d)
    for (const auto& f : a.faces(d)) faces.push_back(f);
  for (int d = 0; d <= b.dimension(); ++d)
    for (const auto& f : b.faces(d)) {
      std::vector<int> g;
      for (int v : f) g.push_back(relabel(v));
      std::sort(g.begin(), g.end());
      faces.push_back(std::move(g));
    }
  return SimplicialComplex::from_faces(labels, faces);
}

SimplicialComplex cone(const SimplicialComplex& a) {
  return join(SimplicialComplex::from_facets({"c"}, {{0}}), a);
}

SimplicialComplex suspension(const SimplicialComplex& a) { return join(sphere0(), a); }

SimplicialComplex complex_skeleton(const SimplicialComplex& a, int k) {
  std::vector<std::vector<int>> faces;
  for (int d = 0; d <= std::min(k, a.dimension()); ++d)
    for (const auto& f : a.faces(d)) faces.push_back(f);
  return SimplicialComplex::from_faces(a.labels(), faces);
}

SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::vector<int>> tuples;
  for (int i = 0; i < a.vertex_count(); ++i)
    for (int j = 0; j < b.vertex_count(); ++j) tuples.push_back({i, j});
  return tuple_complex({&a, &b}, tuples);
}

VertexMap product_map(const VertexMap& f, int /*a_target_size*/, const VertexMap& g, int b_target_size,
                      int b_source_size) {
  VertexMap out;
  out.reserve(f.size() * g.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (int j = 0; j < b_source_size; ++j) out.push_back(f[i] * b_target_size + g[static_cast<std::size_t>(j)]);
  return out;
}

SimplicialComplex subdivision(const SimplicialComplex& a) {
  // Vertex order: by dimension then lexicographic, i.e. the face listing order.
  std::vector<std::string> labels;
  std::vector<int> offset(static_cast<std::size_t>(a.dimension() + 2), 0);
  for (int d = 0; d <= a.dimension(); ++d) {
    offset[d + 1] = offset[d] + static_cast<int>(a.face_count(d));
    for (const auto& f : a.faces(d)) {
      std::string l = "{";
      for (std::size_t i = 0; i < f.size(); ++i) l += (i ? "," : "") + a.labels()[f[i]];
      labels.push_back(l + "}");
    }
  }
  // Immediate cofaces of every face.
  std::vector<std::vector<int>> up(labels.size());
  for (int d = 1; d <= a.dimension(); ++d) {
    const auto& level = a.faces(d);
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t drop = 0; drop < level[i].size(); ++drop) {
        std::vector<int> g;
        for (std::size_t t = 0; t < level[i].size(); ++t)
          if (t != drop) g.push_back(level[i][t]);
        int gi = offset[d - 1] + a.face_index(g);
        up[gi].push_back(offset[d] + static_cast<int>(i));
      }
    }
  }
  // Chains: strictly increasing inclusion sequences; extend by any larger face.
  std::vector<std::vector<int>> above(labels.size());
  for (int v = static_cast<int>(labels.size()) - 1; v >= 0; --v) {
    std::set<int> s;
    for (int w : up[v]) {
      s.insert(w);
      s.insert(above[w].begin(), above[w].end());
    }
    above[v].assign(s.begin(), s.end());
  }
  std::vector<std::vector<int>> faces;
  std::vector<int> chain;
  auto rec = [&](auto&& self, int last) -> void {
    faces.push_back(chain);
    for (int w : above[last]) {
      chain.push_back(w);
      self(self, w);
      chain.pop_back();
    }
  };
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    chain = {v};
    rec(rec, v);
  }
  SimplicialComplex out = SimplicialComplex::from_faces(labels, faces);
  return out;
}

VertexMap subdivision_map(const SimplicialComplex& dom, const SimplicialComplex& tgt, const VertexMap& f) {
  std::vector<int> toff(static_cast<std::size_t>(tgt.dimension() + 2), 0);
  for (int d = 0; d <= tgt.dimension(); ++d) toff[d + 1] = toff[d] + static_cast<int>(tgt.face_count(d));
  VertexMap out;
  out.reserve(dom.total_faces());
  for (int d = 0; d <= dom.dimension(); ++d) {
    for (const auto& face : dom.faces(d)) {
      std::vector<int> img;
      for (int v : face) img.push_back(f[v]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      int idx = tgt.face_index(img);
      if (idx < 0) throw InvariantError("subdivision_map: image is not a face");
      out.push_back(toff[img.size() - 1] + idx);
    }
  }
  return out;
}

VertexMap last_vertex_map(const SimplicialComplex& a) {
  VertexMap out;
  for (int d = 0; d <= a.dimension(); ++d)
    for (const auto& f : a.faces(d)) out.push_back(f.back());
  return out;
}

SimplicialComplex poset_nerve(const std::vector<std::string>& labels, const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && j < i) throw InvariantError("poset_nerve: vertex order is not a linear extension");
  std::vector<std::vector<int>> faces;
  std::vector<int> chain;
  auto rec = [&](auto&& self, int last) -> void {
    faces.push_back(chain);
    for (int w = last + 1; w < n; ++w) {
      if (!leq[last][w]) continue;
      chain.push_back(w);
      self(self, w);
      chain.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) {
    chain = {v};
    rec(rec, v);
  }
  return SimplicialComplex::from_faces(labels, faces);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& a, const std::vector<int>& vertices, VertexMap* inclusion) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> pos(static_cast<std::size_t>(a.vertex_count()), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    pos[vs[i]] = static_cast<int>(i);
    labels.push_back(a.labels()[vs[i]]);
  }
  std::vector<std::vector<int>> faces;
  for (int d = 0; d <= a.dimension(); ++d) {
    for (const auto& f : a.faces(d)) {
      std::vector<int> g;
      bool ok = true;
      for (int v : f) {
        if (pos[v] < 0) {
          ok = false;
          break;
        }
        g.push_back(pos[v]);
      }
      if (ok) faces.push_back(std::move(g));
    }
  }
  if (inclusion) *inclusion = vs;
  return SimplicialComplex::from_faces(labels, faces);
}

}  // namespace towerkit
