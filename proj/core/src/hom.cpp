#include "towerkit/hom.hpp"

#include <algorithm>

namespace towerkit {

FlatCells::FlatCells(const SimplicialSet& x) {
  int top = x.complete() ? std::max(x.dimension(), 0) : x.bound();
  offset_.push_back(0);
  for (int n = 0; n <= top; ++n) {
    for (std::size_t c = 0; c < x.cell_count(n); ++c) cells_.push_back(Simplex::cell_at(n, static_cast<int>(c)));
    offset_.push_back(static_cast<int>(cells_.size()));
  }
}

std::vector<std::vector<int>> enumerate_maps(const SimplicialSet& source, const SimplexTable& target,
                                             const Limits& limits, const std::string& what) {
  if (!source.complete()) throw BoundError(source.bound() + 1, source.bound(), what + ": source must be finite");
  FlatCells flat(source);
  if (flat.top() > target.through())
    throw BoundError(flat.top(), target.through(), what + ": target table too short");
  const SimplicialSet& y = target.set();
  const std::size_t total = flat.size();
  std::vector<std::vector<int>> out;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> assign(total, -1);
  std::vector<std::vector<int>> cand(total);
  std::vector<std::size_t> pos(total, 0);
  std::uint64_t nodes = 0;

  auto candidates = [&](std::size_t t) {
    const Simplex& x = flat[t];
    const int n = x.degree;
    cand[t].clear();
    pos[t] = 0;
    if (n == 0) {
      for (std::size_t v = 0; v < target.simplices(0).size(); ++v) cand[t].push_back(static_cast<int>(v));
      return;
    }
    std::vector<int> need(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
      const Simplex& f = source.face(n, x.cell, i);
      const Simplex& img = target.simplices(f.base_degree())[assign[flat.position(f.base_degree(), f.cell)]];
      Simplex z = f.collapse == 0 ? img : y.apply(img, f.surjection());
      need[i] = target.id(z);
    }
    cand[t] = target.with_boundary(n, need);
  };

  std::size_t t = 0;
  candidates(0);
  while (true) {
    if (pos[t] < cand[t].size()) {
      assign[t] = cand[t][pos[t]++];
      if (++nodes > limits.node_cap()) throw CapExceeded(what, flat[t].degree, limits.cap);
      if (t + 1 == total) {
        out.push_back(assign);
        if (out.size() > limits.cap) throw CapExceeded(what, flat[t].degree, limits.cap);
      } else {
        candidates(++t);
      }
    } else {
      if (t == 0) break;
      --t;
    }
  }
  return out;
}

std::vector<Simplex> induced_cells(const SimplicialComplex& dom, const SimplicialComplex& tgt, const VertexMap& g) {
  std::vector<Simplex> out;
  out.reserve(dom.total_faces());
  std::vector<int> img, set;
  for (int d = 0; d <= dom.dimension(); ++d) {
    for (const auto& f : dom.faces(d)) {
      img.clear();
      for (int v : f) img.push_back(g[v]);
      set = img;
      set.erase(std::unique(set.begin(), set.end()), set.end());
      int c = tgt.face_index(set);
      if (c < 0 || !std::is_sorted(img.begin(), img.end())) throw InvariantError("induced_cells: not a simplicial map");
      Mono surj(img.size());
      int r = 0;
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (i > 0 && img[i] != img[i - 1]) ++r;
        surj[i] = r;
      }
      out.push_back(Simplex::from_surjection(surj, c));
    }
  }
  return out;
}

std::vector<int> precompose(const std::vector<int>& f, const FlatCells& p_cells, const std::vector<Simplex>& g,
                            const SimplexTable& y) {
  std::vector<int> out(g.size());
  for (std::size_t t = 0; t < g.size(); ++t) {
    const Simplex& s = g[t];
    const int m = s.base_degree();
    const Simplex& img = y.simplices(m)[f[p_cells.position(m, s.cell)]];
    Simplex z = s.collapse == 0 ? img : y.set().apply(img, s.surjection());
    out[t] = y.id(z);
  }
  return out;
}

bool is_flag_complex(const SimplicialComplex& k) {
  for (int d = 1; d < k.dimension() + 1; ++d) {
    for (const auto& f : k.faces(d)) {
      for (int v = f.back() + 1; v < k.vertex_count(); ++v) {
        bool all = true;
        for (int u : f)
          if (!k.has_edge(u, v)) {
            all = false;
            break;
          }
        if (!all) continue;
        std::vector<int> g = f;
        g.push_back(v);
        if (!k.contains(g)) return false;
      }
    }
  }
  return true;
}

int VertexProblem::add_block(const SimplicialComplex& domain, const SimplicialComplex& target) {
  Block b{&domain, &target, total_, is_flag_complex(target)};
  blocks_.push_back(b);
  total_ += domain.vertex_count();
  block_of_.resize(static_cast<std::size_t>(total_), static_cast<int>(blocks_.size()) - 1);
  links_.resize(static_cast<std::size_t>(total_));
  fixed_.resize(static_cast<std::size_t>(total_), -1);
  return b.offset;
}

void VertexProblem::push_link(int earlier, int later, const VertexMap& push) {
  if (earlier > later) {
    // Same relation seen from the other end: the later vertex is the source.
    maps_.push_back(push);
    links_[earlier].push_back({later, static_cast<int>(maps_.size()) - 1, false});
    return;
  }
  maps_.push_back(push);
  links_[later].push_back({earlier, static_cast<int>(maps_.size()) - 1, true});
}

void VertexProblem::pull_link(int earlier, int later, const VertexMap& pull) {
  if (earlier > later) {
    maps_.push_back(pull);
    links_[earlier].push_back({later, static_cast<int>(maps_.size()) - 1, true});
    return;
  }
  maps_.push_back(pull);
  links_[later].push_back({earlier, static_cast<int>(maps_.size()) - 1, false});
}

void VertexProblem::fix(int vertex, int value) { fixed_[vertex] = value; }

std::vector<Key> VertexProblem::solve(const Limits& limits, const std::string& what, int degree) const {
  std::vector<Key> out;
  const int total = total_;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  // Per-vertex static data.
  std::vector<std::vector<int>> earlier_nbrs(static_cast<std::size_t>(total));
  std::vector<std::vector<std::vector<int>>> top_faces(static_cast<std::size_t>(total));
  for (const auto& b : blocks_) {
    const SimplicialComplex& d = *b.domain;
    for (const auto& e : d.faces(1)) earlier_nbrs[b.offset + e[1]].push_back(b.offset + e[0]);
    if (!b.flag_target)
      for (int k = 2; k <= d.dimension(); ++k)
        for (const auto& f : d.faces(k)) {
          std::vector<int> g;
          for (int v : f) g.push_back(b.offset + v);
          top_faces[b.offset + f.back()].push_back(std::move(g));
        }
  }
  std::vector<std::vector<std::vector<int>>> up(blocks_.size());
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const SimplicialComplex& t = *blocks_[bi].target;
    up[bi].resize(static_cast<std::size_t>(t.vertex_count()));
    for (int a = 0; a < t.vertex_count(); ++a)
      for (int c = a; c < t.vertex_count(); ++c)
        if (t.has_edge(a, c)) up[bi][a].push_back(c);
  }

  std::vector<int> val(static_cast<std::size_t>(total), -1);
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(total));
  std::vector<std::size_t> pos(static_cast<std::size_t>(total), 0);
  std::uint64_t nodes = 0;
  std::vector<int> img;

  auto accept = [&](int w, int c) {
    const Block& b = blocks_[block_of_[w]];
    const SimplicialComplex& t = *b.target;
    if (fixed_[w] >= 0 && fixed_[w] != c) return false;
    for (const auto& l : links_[w]) {
      const VertexMap& m = maps_[l.map];
      if (l.push ? m[val[l.other]] != c : m[c] != val[l.other]) return false;
    }
    for (int u : earlier_nbrs[w])
      if (val[u] > c || !t.has_edge(val[u], c)) return false;
    for (const auto& f : top_faces[w]) {
      img.clear();
      for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (img.empty() || img.back() != val[f[i]]) img.push_back(val[f[i]]);
      if (img.empty() || img.back() != c) img.push_back(c);
      if (img.size() > 2 && !t.contains(img)) return false;
    }
    return true;
  };

  auto candidates = [&](int w) {
    cand[w].clear();
    pos[w] = 0;
    const int bi = block_of_[w];
    const SimplicialComplex& t = *blocks_[bi].target;
    auto consider = [&](int c) {
      ++nodes;
      if (accept(w, c)) cand[w].push_back(c);
    };
    if (fixed_[w] >= 0) {
      consider(fixed_[w]);
    } else if (auto it = std::find_if(links_[w].begin(), links_[w].end(), [](const Link& l) { return l.push; });
               it != links_[w].end()) {
      consider(maps_[it->map][val[it->other]]);
    } else if (!earlier_nbrs[w].empty()) {
      const std::vector<int>* best = nullptr;
      for (int u : earlier_nbrs[w])
        if (!best || up[bi][val[u]].size() < best->size()) best = &up[bi][val[u]];
      for (int c : *best) consider(c);
    } else {
      for (int c = 0; c < t.vertex_count(); ++c) consider(c);
    }
    if (nodes > limits.node_cap()) throw CapExceeded(what, degree, limits.cap);
  };

  int w = 0;
  candidates(0);
  while (true) {
    if (pos[w] < cand[w].size()) {
      val[w] = cand[w][pos[w]++];
      if (w + 1 == total) {
        out.push_back(make_key(val));
        if (out.size() > limits.cap || out.size() * static_cast<std::uint64_t>(total) > limits.key_budget)
          throw CapExceeded(what, degree, limits.cap);
      } else {
        candidates(++w);
      }
    } else {
      if (w == 0) break;
      --w;
    }
  }
  return out;
}

}  // namespace towerkit
