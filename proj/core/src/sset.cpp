#include "towerkit/sset.hpp"

#include <algorithm>
#include <map>

#include "towerkit/hom.hpp"

namespace towerkit {

namespace {

std::string face_label(const SimplicialComplex& k, const std::vector<int>& f) {
  if (f.size() == 1) return k.labels()[f[0]];
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + k.labels()[f[i]];
  return s + "}";
}

std::string simplex_label(const SimplicialSet& x, const Simplex& s) {
  std::string l = x.label(s.base_degree(), s.cell);
  if (l.empty()) l = "c" + std::to_string(s.base_degree()) + "." + std::to_string(s.cell);
  for (int j : s.degeneracy_word()) l = "s" + std::to_string(j) + l;
  return l;
}

void finish(SimplicialSet& x, int bound, bool complete) {
  x.set_bound(complete ? std::max(x.dimension(), 0) : bound, complete);
}

// sd^N applied to a vertex map between complexes whose subdivisions are given.
VertexMap subdivide_map(const std::vector<SimplicialComplex>& dom, const std::vector<SimplicialComplex>& tgt,
                        VertexMap g) {
  for (std::size_t t = 0; t + 1 < dom.size(); ++t) g = subdivision_map(dom[t], tgt[t], g);
  return g;
}

std::vector<SimplicialComplex> subdivision_tower(const SimplicialComplex& a, int depth) {
  std::vector<SimplicialComplex> out{a};
  for (int t = 0; t < depth; ++t) out.push_back(subdivision(out.back()));
  return out;
}

}  // namespace

SimplicialSet complex_to_sset(const SimplicialComplex& k, int bound) {
  const int dim = k.dimension();
  if (bound < 0) bound = std::max(dim, 0);
  SimplicialSet x(bound, bound >= dim);
  for (int d = 0; d <= std::min(bound, dim); ++d) {
    for (const auto& f : k.faces(d)) {
      std::vector<Simplex> faces;
      if (d > 0) {
        std::vector<int> g(f.size() - 1);
        for (int i = 0; i <= d; ++i) {
          std::size_t t = 0;
          for (int j = 0; j <= d; ++j)
            if (j != i) g[t++] = f[j];
          faces.push_back(Simplex::cell_at(d - 1, k.face_index(g)));
        }
      }
      x.add_cell(d, std::move(faces), face_label(k, f));
    }
  }
  finish(x, bound, bound >= dim);
  return x;
}

SimplicialSet standard_simplex(int n, int bound) {
  if (bound < 0) throw InvariantError("standard_simplex: negative bound");
  return complex_to_sset(simplex_complex(n), bound);
}

SimplicialSet skeleton(const SimplicialSet& x, int k) {
  x.known_through(k, "skeleton");
  SimplicialSet out(k, true);
  for (int n = 0; n <= k; ++n) {
    if (n > x.bound() && x.complete()) break;
    for (std::size_t c = 0; c < x.cell_count(n); ++c) {
      std::vector<Simplex> faces;
      for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(x.face(n, static_cast<int>(c), i));
      out.add_cell(n, std::move(faces), x.label(n, static_cast<int>(c)));
    }
  }
  finish(out, k, true);
  return out;
}

SimplicialSet coskeleton(const SimplicialSet& x, int k, int bound, const Limits& limits) {
  if (k < 0) throw InvariantError("coskeleton: negative k");
  x.known_through(k, "coskeleton");
  SimplexTable table(x, k);
  std::vector<SimplicialComplex> dom_c;
  std::vector<SimplicialSet> dom_s;
  for (int n = 0; n <= bound; ++n) {
    dom_c.push_back(simplex_complex(n, std::min(k, n)));
    dom_s.push_back(complex_to_sset(dom_c.back()));
  }
  std::vector<FlatCells> flats;
  for (const auto& d : dom_s) flats.emplace_back(d);
  std::map<std::pair<int, int>, std::vector<Simplex>> face_maps, degen_maps;
  SimplexSource src;
  src.enumerate = [&](int n) {
    std::vector<Key> keys;
    for (auto& f : enumerate_maps(dom_s[n], table, limits, "coskeleton degree " + std::to_string(n)))
      keys.push_back(make_key(f));
    return keys;
  };
  src.face = [&](int n, const Key& key, int i) {
    auto& g = face_maps[{n, i}];
    if (g.empty()) g = induced_cells(dom_c[n - 1], dom_c[n], coface_map(n, i));
    return make_key(precompose(key_values(key), flats[n], g, table));
  };
  src.degeneracy = [&](int n, const Key& key, int j) {
    auto& g = degen_maps[{n, j}];
    if (g.empty()) g = induced_cells(dom_c[n + 1], dom_c[n], codegeneracy_map(n, j));
    return make_key(precompose(key_values(key), flats[n], g, table));
  };
  return normalize(src, bound, false, limits, "coskeleton").set;
}

NormalForm product(const SimplicialSet& a, const SimplicialSet& b, int bound, const Limits& limits) {
  SimplexTable ta(a, bound), tb(b, bound);
  SimplexSource src;
  src.enumerate = [&](int n) {
    std::vector<Key> keys;
    const auto na = ta.simplices(n).size(), nb = tb.simplices(n).size();
    if (na * nb > limits.cap) throw CapExceeded("product", n, limits.cap);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) keys.push_back(make_key({static_cast<int>(i), static_cast<int>(j)}));
    return keys;
  };
  src.face = [&](int n, const Key& k, int i) {
    return make_key({ta.boundary(n, k[0])[i], tb.boundary(n, k[1])[i]});
  };
  src.degeneracy = [&](int n, const Key& k, int j) {
    return make_key({ta.id(a.degeneracy_of(ta.simplices(n)[k[0]], j)),
                     tb.id(b.degeneracy_of(tb.simplices(n)[k[1]], j))});
  };
  src.label = [&](int n, const Key& k) {
    return "(" + simplex_label(a, ta.simplices(n)[k[0]]) + "|" + simplex_label(b, tb.simplices(n)[k[1]]) + ")";
  };
  const bool complete = a.complete() && b.complete() && bound >= a.dimension() + b.dimension();
  NormalForm nf = normalize(src, bound, complete, limits, "product");
  finish(nf.set, bound, complete);
  return nf;
}

SimplicialSet mapping_space(const SimplicialSet& k, const SimplicialSet& y, int bound, const Limits& limits) {
  if (!k.complete()) throw BoundError(k.bound() + 1, k.bound(), "mapping_space: domain must be finite");
  const int dk = std::max(k.dimension(), 0);
  SimplexTable ty(y, dk + bound);
  std::vector<SimplicialSet> simplices;
  std::vector<SimplexTable> simplex_tables;
  std::vector<NormalForm> prods;
  simplices.reserve(static_cast<std::size_t>(bound + 1));
  simplex_tables.reserve(static_cast<std::size_t>(bound + 1));
  for (int n = 0; n <= bound; ++n) {
    simplices.push_back(standard_simplex(n, n));
    simplex_tables.emplace_back(simplices.back(), dk + bound);
    prods.push_back(product(k, simplices.back(), dk + bound, limits));
  }
  std::vector<FlatCells> flats;
  for (const auto& p : prods) flats.emplace_back(p.set);
  std::vector<SimplicialComplex> deltas;
  std::vector<std::vector<Key>> cell_keys(prods.size());
  for (std::size_t n = 0; n < prods.size(); ++n) {
    deltas.push_back(simplex_complex(static_cast<int>(n)));
    cell_keys[n].resize(flats[n].size());
    for (const auto& level : prods[n].forms)
      for (const auto& [key, s] : level)
        if (s.nondegenerate()) cell_keys[n][flats[n].position(s.degree, s.cell)] = key;
  }
  // Cell images of id x theta : K x Delta^a -> K x Delta^b.
  auto induced = [&](int a, int b, const Mono& theta) {
    std::vector<Simplex> out;
    for (std::size_t t = 0; t < flats[a].size(); ++t) {
      const int d = flats[a][t].degree;
      const Key& key = cell_keys[a][t];
      Simplex ds = simplex_tables[a].simplices(d)[key[1]];
      const auto& verts = deltas[a].faces(ds.base_degree())[ds.cell];
      Mono seq;
      for (int v : ds.surjection()) seq.push_back(theta[verts[v]]);
      std::vector<int> set = seq;
      set.erase(std::unique(set.begin(), set.end()), set.end());
      Mono surj(seq.size());
      for (std::size_t i = 0, r = 0; i < seq.size(); ++i) {
        if (i > 0 && seq[i] != seq[i - 1]) ++r;
        surj[i] = static_cast<int>(r);
      }
      Simplex img_delta = Simplex::from_surjection(surj, deltas[b].face_index(set));
      Key target_key = make_key({key[0], simplex_tables[b].id(img_delta)});
      out.push_back(prods[b].forms[d].at(target_key));
    }
    return out;
  };
  std::map<std::pair<int, int>, std::vector<Simplex>> face_maps, degen_maps;
  SimplexSource src;
  src.enumerate = [&](int n) {
    std::vector<Key> keys;
    for (auto& f : enumerate_maps(prods[n].set, ty, limits, "mapping_space degree " + std::to_string(n)))
      keys.push_back(make_key(f));
    return keys;
  };
  src.face = [&](int n, const Key& key, int i) {
    auto& g = face_maps[{n, i}];
    if (g.empty()) g = induced(n - 1, n, coface_map(n, i));
    return make_key(precompose(key_values(key), flats[n], g, ty));
  };
  src.degeneracy = [&](int n, const Key& key, int j) {
    auto& g = degen_maps[{n, j}];
    if (g.empty()) g = induced(n + 1, n, codegeneracy_map(n, j));
    return make_key(precompose(key_values(key), flats[n], g, ty));
  };
  return normalize(src, bound, false, limits, "mapping_space").set;
}

SimplicialComplex iterated_subdivision(const SimplicialComplex& a, int depth, VertexMap* last_vertex) {
  SimplicialComplex cur = a;
  VertexMap last = identity_vertex_map(a.vertex_count());
  for (int t = 0; t < depth; ++t) {
    VertexMap step = last_vertex_map(cur);
    last = compose_maps(last, step);
    cur = subdivision(cur);
  }
  if (last_vertex) *last_vertex = last;
  return cur;
}

ExApprox ex_approx(const SimplicialSet& x, int depth, int bound, const Limits& limits) {
  if (depth < 0) throw InvariantError("ex_approx: negative depth");
  x.known_through(bound, "ex_approx");
  SimplexTable table(x, bound);
  std::vector<std::vector<SimplicialComplex>> towers;
  std::vector<SimplicialSet> dom_s;
  std::vector<VertexMap> last;
  for (int n = 0; n <= bound; ++n) {
    towers.push_back(subdivision_tower(simplex_complex(n), depth));
    dom_s.push_back(complex_to_sset(towers.back().back()));
    VertexMap l;
    iterated_subdivision(simplex_complex(n), depth, &l);
    last.push_back(std::move(l));
  }
  std::vector<FlatCells> flats;
  for (const auto& d : dom_s) flats.emplace_back(d);
  std::map<std::pair<int, int>, std::vector<Simplex>> face_maps, degen_maps;
  SimplexSource src;
  src.enumerate = [&](int n) {
    std::vector<Key> keys;
    for (auto& f : enumerate_maps(dom_s[n], table, limits, "ex_approx degree " + std::to_string(n)))
      keys.push_back(make_key(f));
    return keys;
  };
  src.face = [&](int n, const Key& key, int i) {
    auto& g = face_maps[{n, i}];
    if (g.empty())
      g = induced_cells(towers[n - 1].back(), towers[n].back(), subdivide_map(towers[n - 1], towers[n], coface_map(n, i)));
    return make_key(precompose(key_values(key), flats[n], g, table));
  };
  src.degeneracy = [&](int n, const Key& key, int j) {
    auto& g = degen_maps[{n, j}];
    if (g.empty())
      g = induced_cells(towers[n + 1].back(), towers[n].back(),
                        subdivide_map(towers[n + 1], towers[n], codegeneracy_map(n, j)));
    return make_key(precompose(key_values(key), flats[n], g, table));
  };
  NormalForm nf = normalize(src, bound, false, limits, "ex_approx");
  if (depth == 0 && x.complete() && bound >= x.dimension()) finish(nf.set, bound, true);

  ExApprox out{std::move(nf.set), {}};
  out.inclusion.image.resize(static_cast<std::size_t>(bound + 1));
  for (int n = 0; n <= bound; ++n) {
    const SimplicialComplex& sd = towers[n].back();
    for (std::size_t c = 0; c < x.cell_count(n); ++c) {
      Simplex cell = Simplex::cell_at(n, static_cast<int>(c));
      std::vector<int> ids;
      for (int d = 0; d <= sd.dimension(); ++d)
        for (const auto& f : sd.faces(d)) {
          Mono seq;
          for (int v : f) seq.push_back(last[n][v]);
          ids.push_back(table.id(x.apply(cell, seq)));
        }
      out.inclusion.image[n].push_back(nf.forms[n].at(make_key(ids)));
    }
  }
  return out;
}

Key CechPower::extra(const Key& y) const {
  Key s = y;
  s.push_back(static_cast<char16_t>(basepoint));
  return s;
}

CechPower cech_power(int points, int basepoint, int bound) {
  if (points <= 0) throw InvariantError("cech_power: empty vertex set");
  if (basepoint < 0 || basepoint >= points) throw InvariantError("cech_power: basepoint out of range");
  SimplexSource src;
  src.enumerate = [points](int n) {
    std::vector<Key> keys;
    std::vector<int> t(static_cast<std::size_t>(n + 1), 0);
    while (true) {
      keys.push_back(make_key(t));
      int i = n;
      while (i >= 0 && t[i] == points - 1) t[i--] = 0;
      if (i < 0) break;
      ++t[i];
    }
    return keys;
  };
  src.face = [](int, const Key& k, int i) {
    Key s = k;
    s.erase(static_cast<std::size_t>(i), 1);
    return s;
  };
  src.degeneracy = [](int, const Key& k, int j) {
    Key s = k;
    s.insert(s.begin() + j, k[j]);
    return s;
  };
  src.label = [](int, const Key& k) {
    std::string l = "(";
    for (std::size_t i = 0; i < k.size(); ++i) l += (i ? "," : "") + std::to_string(static_cast<int>(k[i]));
    return l + ")";
  };
  CechPower c;
  c.nf = normalize(src, bound, false, Limits{~0ull}, "cech_power");
  c.points = points;
  c.basepoint = basepoint;
  return c;
}

std::size_t check_contracting_identities(const CechPower& c, int through, std::vector<std::string>* failures) {
  std::size_t checked = 0;
  auto face = [](const Key& k, int i) {
    Key s = k;
    s.erase(static_cast<std::size_t>(i), 1);
    return s;
  };
  auto degen = [](const Key& k, int j) {
    Key s = k;
    s.insert(s.begin() + j, k[j]);
    return s;
  };
  auto show = [](const Key& k) {
    std::string l = "(";
    for (std::size_t i = 0; i < k.size(); ++i) l += (i ? "," : "") + std::to_string(static_cast<int>(k[i]));
    return l + ")";
  };
  auto expect = [&](bool ok, const std::string& what, const Key& y) {
    ++checked;
    if (!ok && failures) failures->push_back(what + " fails at " + show(y));
  };
  const SimplicialSet& x = c.nf.set;
  // y runs over Y_{n-1} (n = 0 is the augmentation point); S y lies in Y_n.
  for (int n = 0; n <= through; ++n) {
    std::vector<Key> ys;
    if (n == 0) {
      ys.emplace_back();
    } else {
      Key t(static_cast<std::size_t>(n), u'\0');
      while (true) {
        ys.push_back(t);
        int i = n - 1;
        while (i >= 0 && t[i] == c.points - 1) t[i--] = u'\0';
        if (i < 0) break;
        ++t[i];
      }
    }
    for (const Key& y : ys) {
      Key sy = c.extra(y);
      for (int i = 0; i < n; ++i) expect(face(sy, i) == c.extra(face(y, i)), "d_i S = S d_i", y);
      expect(face(sy, n) == y, "d_n S = id", y);
      for (int i = 0; i < n; ++i) expect(degen(sy, i) == c.extra(degen(y, i)), "s_i S = S s_i", y);
      // The same identities read through the normal form of the built set.
      if (n >= 1 && n <= x.bound()) {
        const Simplex& fsy = c.nf.forms[n].at(sy);
        expect(x.face_of(fsy, n) == c.nf.forms[n - 1].at(y), "normal form d_n S = id", y);
        for (int i = 0; i < n && n >= 2; ++i)
          expect(x.face_of(fsy, i) == c.nf.forms[n - 1].at(c.extra(face(y, i))), "normal form d_i S = S d_i", y);
      }
    }
  }
  return checked;
}

NormalForm diagonal_ss(const BisimplicialSource& y, int bound, const Limits& limits) {
  SimplexSource src;
  src.enumerate = [&](int n) { return y.enumerate(n, n); };
  src.face = [&](int n, const Key& k, int i) { return y.face_h(n, n - 1, y.face_v(n, n, k, i), i); };
  src.degeneracy = [&](int n, const Key& k, int j) {
    return y.degeneracy_h(n, n + 1, y.degeneracy_v(n, n, k, j), j);
  };
  return normalize(src, bound, false, limits, "diagonal");
}

BisimplicialSource external_product(const SimplexTable& a, const SimplexTable& b) {
  BisimplicialSource s;
  s.enumerate = [&a, &b](int p, int q) {
    std::vector<Key> keys;
    for (std::size_t i = 0; i < a.simplices(p).size(); ++i)
      for (std::size_t j = 0; j < b.simplices(q).size(); ++j)
        keys.push_back(make_key({static_cast<int>(i), static_cast<int>(j)}));
    return keys;
  };
  s.face_h = [&a](int p, int, const Key& k, int i) {
    return make_key({a.boundary(p, k[0])[i], static_cast<int>(k[1])});
  };
  s.face_v = [&b](int, int q, const Key& k, int i) {
    return make_key({static_cast<int>(k[0]), b.boundary(q, k[1])[i]});
  };
  s.degeneracy_h = [&a](int p, int, const Key& k, int j) {
    return make_key({a.id(a.set().degeneracy_of(a.simplices(p)[k[0]], j)), static_cast<int>(k[1])});
  };
  s.degeneracy_v = [&b](int, int q, const Key& k, int j) {
    return make_key({static_cast<int>(k[0]), b.id(b.set().degeneracy_of(b.simplices(q)[k[1]], j))});
  };
  return s;
}

std::size_t count_maps(const SimplicialSet& source, const SimplicialSet& target, const Limits& limits) {
  SimplexTable t(target, std::max(source.dimension(), 0));
  return enumerate_maps(source, t, limits, "count_maps").size();
}

}  // namespace towerkit
