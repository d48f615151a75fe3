#include "towerkit/homalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "towerkit/errors.hpp"

namespace towerkit {

using boost::multiprecision::abs;

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<long long>>& rows, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  DenseMatrix m(static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InvariantError("ragged matrix");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols != y.rows) throw InvariantError("matrix shape mismatch");
  DenseMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y(k, j) != 0) z(i, j) += x(i, k) * y(k, j);
    }
  return z;
}

DenseMatrix to_dense(const SparseMatrix& m) {
  DenseMatrix d(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.columns[j]) d(i, j) = v;
  return d;
}

BigInt determinant(const DenseMatrix& m) {
  if (m.rows != m.cols) throw InvariantError("determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  DenseMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

ChainComplex chains(const SimplicialSet& x, int top, bool reduced) {
  x.known_through(top, "chains");
  ChainComplex c;
  c.top = top;
  c.reduced = reduced;
  for (int n = 0; n <= top; ++n) c.rank.push_back(static_cast<int>(x.cell_count(n)));
  c.boundary.resize(static_cast<std::size_t>(top + 1));
  SparseMatrix& aug = c.boundary[0];
  aug.cols = c.rank[0];
  aug.rows = reduced ? 1 : 0;
  aug.columns.resize(static_cast<std::size_t>(aug.cols));
  if (reduced)
    for (auto& col : aug.columns) col.push_back({0, 1});
  for (int n = 1; n <= top; ++n) {
    SparseMatrix& d = c.boundary[n];
    d.rows = c.rank[n - 1];
    d.cols = c.rank[n];
    d.columns.resize(static_cast<std::size_t>(d.cols));
    for (int j = 0; j < d.cols; ++j) {
      std::map<int, std::int64_t> acc;
      for (int i = 0; i <= n; ++i) {
        const Simplex& f = x.face(n, j, i);
        if (!f.nondegenerate()) continue;
        acc[f.cell] += (i % 2 == 0) ? 1 : -1;
      }
      for (const auto& [r, v] : acc)
        if (v != 0) d.columns[j].push_back({r, v});
    }
  }
  return c;
}

bool ChainComplex::squares_to_zero() const {
  for (int n = 1; n <= top; ++n) {
    const SparseMatrix& hi = boundary[n];
    const SparseMatrix& lo = boundary[n - 1];
    if (lo.rows == 0) continue;
    for (const auto& col : hi.columns) {
      std::map<int, std::int64_t> acc;
      for (const auto& [k, v] : col)
        for (const auto& [i, w] : lo.columns[k]) acc[i] += v * w;
      for (const auto& [i, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

// Smith normal form ---------------------------------------------------------

namespace {

struct SmithWork {
  DenseMatrix s, u, v;
  bool track;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < s.cols; ++c) std::swap(s(i, c), s(j, c));
    if (track)
      for (int c = 0; c < u.cols; ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < s.rows; ++r) std::swap(s(r, i), s(r, j));
    if (track)
      for (int r = 0; r < v.rows; ++r) std::swap(v(r, i), v(r, j));
  }
  // row i += q * row j
  void add_row(int i, int j, const BigInt& q) {
    if (q == 0) return;
    for (int c = 0; c < s.cols; ++c)
      if (s(j, c) != 0) s(i, c) += q * s(j, c);
    if (track)
      for (int c = 0; c < u.cols; ++c)
        if (u(j, c) != 0) u(i, c) += q * u(j, c);
  }
  // col i += q * col j
  void add_col(int i, int j, const BigInt& q) {
    if (q == 0) return;
    for (int r = 0; r < s.rows; ++r)
      if (s(r, j) != 0) s(r, i) += q * s(r, j);
    if (track)
      for (int r = 0; r < v.rows; ++r)
        if (v(r, j) != 0) v(r, i) += q * v(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < s.cols; ++c) s(i, c) = -s(i, c);
    if (track)
      for (int c = 0; c < u.cols; ++c) u(i, c) = -u(i, c);
  }

  void run() {
    const int m = s.rows, n = s.cols;
    for (int t = 0; t < std::min(m, n); ++t) {
      while (true) {
        // Pivot: smallest nonzero |entry| in the trailing block.
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = t; i < m; ++i)
          for (int j = t; j < n; ++j)
            if (s(i, j) != 0 && (pi < 0 || abs(s(i, j)) < best)) {
              best = abs(s(i, j));
              pi = i;
              pj = j;
            }
        if (pi < 0) return;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (int i = t + 1; i < m; ++i) {
          if (s(i, t) == 0) continue;
          BigInt q = s(i, t) / s(t, t);
          add_row(i, t, -q);
          if (s(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < n; ++j) {
          if (s(t, j) == 0) continue;
          BigInt q = s(t, j) / s(t, t);
          add_col(j, t, -q);
          if (s(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // Divisibility of the trailing block.
        int bad = -1;
        for (int i = t + 1; i < m && bad < 0; ++i)
          for (int j = t + 1; j < n; ++j)
            if (s(i, j) % s(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        add_row(t, bad, 1);
      }
      if (s(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const DenseMatrix& m) {
  SmithWork w{m, DenseMatrix::identity(m.rows), DenseMatrix::identity(m.cols), true};
  w.run();
  SmithResult r;
  r.s = std::move(w.s);
  r.u = std::move(w.u);
  r.v = std::move(w.v);
  for (int t = 0; t < std::min(r.s.rows, r.s.cols) && r.s(t, t) != 0; ++t) r.diagonal.push_back(r.s(t, t));
  bool diag = true;
  for (int i = 0; i < r.s.rows; ++i)
    for (int j = 0; j < r.s.cols; ++j)
      if (i != j && r.s(i, j) != 0) diag = false;
  for (std::size_t t = 1; t < r.diagonal.size(); ++t)
    if (r.diagonal[t] % r.diagonal[t - 1] != 0) diag = false;
  r.verified = diag && multiply(multiply(r.u, m), r.v) == r.s && abs(determinant(r.u)) == 1 &&
               abs(determinant(r.v)) == 1;
  if (!r.verified) throw InvariantError("Smith normal form certificate failed");
  return r;
}

// Sparse invariant factors -----------------------------------------------------

namespace {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

template <class T>
using Column = std::vector<std::pair<int, T>>;

// col -= a * piv
template <class T>
Column<T> axpy(const Column<T>& col, const T& a, const Column<T>& piv) {
  Column<T> out;
  out.reserve(col.size() + piv.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < piv.size()) {
    if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
      out.push_back(col[i++]);
    } else if (i == col.size() || piv[j].first < col[i].first) {
      out.push_back({piv[j].first, checked_mul(T(-1), checked_mul(a, piv[j].second))});
      ++j;
    } else {
      T v = checked_add(col[i].second, checked_mul(T(-1), checked_mul(a, piv[j].second)));
      if (v != 0) out.push_back({col[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
InvariantFactors eliminate(const SparseMatrix& m) {
  std::vector<int> pivot_order(static_cast<std::size_t>(m.rows), -1);  // row -> creation index
  std::vector<Column<T>> pivots;                                      // by creation index
  std::vector<int> pivot_row;
  std::vector<Column<T>> residual;

  auto clear = [&](Column<T>& col) {
    while (true) {
      int best = -1;
      std::size_t at = 0;
      for (std::size_t k = 0; k < col.size(); ++k) {
        int o = pivot_order[col[k].first];
        if (o >= 0 && (best < 0 || o < best)) {
          best = o;
          at = k;
        }
      }
      if (best < 0) return;
      const Column<T>& p = pivots[best];
      T unit = 0;
      for (const auto& [r, v] : p)
        if (r == pivot_row[best]) unit = v;
      T a = checked_mul(col[at].second, unit);  // unit^-1 == unit
      col = axpy(col, a, p);
    }
  };
  auto try_pivot = [&](Column<T>& col) {
    for (const auto& [r, v] : col)
      if (is_unit(v)) {
        pivot_order[r] = static_cast<int>(pivots.size());
        pivot_row.push_back(r);
        pivots.push_back(std::move(col));
        return true;
      }
    return false;
  };

  for (const auto& src : m.columns) {
    Column<T> col;
    col.reserve(src.size());
    for (const auto& [r, v] : src) col.push_back({r, T(v)});
    clear(col);
    if (col.empty()) continue;
    if (!try_pivot(col)) residual.push_back(std::move(col));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Column<T>> keep;
    for (auto& col : residual) {
      clear(col);
      if (col.empty()) continue;
      if (try_pivot(col))
        changed = true;
      else
        keep.push_back(std::move(col));
    }
    residual = std::move(keep);
  }

  InvariantFactors out;
  out.rank = static_cast<int>(pivots.size());
  if (residual.empty()) return out;
  std::map<int, int> row_index;
  for (const auto& col : residual)
    for (const auto& [r, v] : col) row_index.emplace(r, 0);
  int k = 0;
  for (auto& [r, idx] : row_index) idx = k++;
  DenseMatrix d(k, static_cast<int>(residual.size()));
  for (std::size_t j = 0; j < residual.size(); ++j)
    for (const auto& [r, v] : residual[j]) d(row_index[r], static_cast<int>(j)) = BigInt(v);
  SmithWork w{d, {}, {}, false};
  w.run();
  for (int t = 0; t < std::min(w.s.rows, w.s.cols) && w.s(t, t) != 0; ++t) {
    ++out.rank;
    if (w.s(t, t) != 1) out.torsion.push_back(w.s(t, t));
  }
  return out;
}

}  // namespace

InvariantFactors invariant_factors(const SparseMatrix& m) {
  try {
    return eliminate<std::int64_t>(m);
  } catch (const Overflow&) {
    return eliminate<BigInt>(m);
  }
}

// Homology ---------------------------------------------------------------------

const HomologyGroup& HomologyResult::at(int degree) const {
  for (const auto& g : groups)
    if (g.degree == degree) return g;
  throw BoundError(degree, groups.empty() ? -1 : groups.back().degree, "homology degree");
}

bool HomologyResult::trivial() const {
  for (const auto& g : groups)
    if (g.betti != 0 || !g.torsion.empty()) return false;
  return true;
}

std::vector<int> HomologyResult::bettis() const {
  std::vector<int> b;
  for (const auto& g : groups)
    if (g.degree >= 0) b.push_back(g.betti);
  return b;
}

HomologyResult homology(const ChainComplex& c, int r) {
  if (r + 1 > c.top) throw BoundError(r + 1, c.top, "homology");
  std::vector<InvariantFactors> f(static_cast<std::size_t>(r + 2));
  for (int n = 0; n <= r + 1; ++n) f[n] = invariant_factors(c.boundary[n]);
  HomologyResult h;
  h.reduced = c.reduced;
  if (c.reduced) h.groups.push_back({-1, 1 - f[0].rank, {}});
  for (int n = 0; n <= r; ++n) {
    HomologyGroup g;
    g.degree = n;
    g.betti = c.rank[n] - f[n].rank - f[n + 1].rank;
    g.torsion = f[n + 1].torsion;
    std::sort(g.torsion.begin(), g.torsion.end());
    h.groups.push_back(std::move(g));
  }
  return h;
}

HomologyResult homology(const SimplicialSet& x, int r, bool reduced) {
  if (r < 0) throw InvariantError("homology: negative range");
  return homology(chains(x, r + 1, reduced), r);
}

Connectivity connectivity(const SimplicialSet& x, int b, bool simply_connected_hint) {
  Connectivity c;
  c.tag = simply_connected_hint ? "Hurewicz-valid" : "homological";
  HomologyResult h = homology(x, std::max(b - 1, 0), true);
  c.value = b - 1;
  c.saturated = true;
  for (const auto& g : h.groups) {
    if (g.degree > b - 1) break;
    if (g.betti != 0 || !g.torsion.empty()) {
      c.value = g.degree - 1;
      c.saturated = false;
      break;
    }
  }
  return c;
}

long long euler_characteristic(const SimplicialSet& x) {
  long long chi = 0;
  const int top = x.complete() ? std::max(x.dimension(), 0) : x.bound();
  for (int n = 0; n <= top; ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(x.cell_count(n));
  return chi;
}

GraphIsomorphism graph_isomorphic(const SimplicialComplex& g, const SimplicialComplex& h) {
  if (g.dimension() > 1 || h.dimension() > 1) throw UnsupportedError("graph_isomorphic: complex of dimension > 1");
  if (g.vertex_count() > 12 || h.vertex_count() > 12) throw UnsupportedError("graph_isomorphic: more than 12 vertices");
  GraphIsomorphism out;
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.face_count(1) != h.face_count(1)) return out;
  auto degrees = [](const SimplicialComplex& k) {
    std::vector<int> d(static_cast<std::size_t>(k.vertex_count()), 0);
    for (const auto& e : k.faces(1)) {
      ++d[e[0]];
      ++d[e[1]];
    }
    return d;
  };
  std::vector<int> dg = degrees(g), dh = degrees(h);
  {
    auto a = dg, b = dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return out;
  }
  VertexMap f(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || dg[v] != dh[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = (g.has_edge(u, v) == h.has_edge(f[u], w));
      if (!ok) continue;
      f[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (rec(rec, 0)) {
    out.isomorphic = true;
    out.witness = f;
  }
  return out;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string homology_csv(const HomologyResult& h) {
  std::ostringstream os;
  os << "degree,betti,torsion\n";
  for (const auto& g : h.groups) {
    os << g.degree << "," << g.betti << ",";
    for (std::size_t i = 0; i < g.torsion.size(); ++i) os << (i ? ";" : "") << g.torsion[i].str();
    os << "\n";
  }
  return os.str();
}

std::vector<int> components(const SimplicialSet& x) {
  const int n = static_cast<int>(x.cell_count(0));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (x.bound() >= 1)
    for (std::size_t e = 0; e < x.cell_count(1); ++e) {
      int a = find(x.face(1, static_cast<int>(e), 0).cell), b = find(x.face(1, static_cast<int>(e), 1).cell);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> comp(static_cast<std::size_t>(n)), id(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (id[r] < 0) id[r] = next++;
    comp[v] = id[r];
  }
  return comp;
}

std::vector<std::vector<int>> component_matrix(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f) {
  const auto ca = components(a), cb = components(b);
  const int na = ca.empty() ? 0 : *std::max_element(ca.begin(), ca.end()) + 1;
  const int nb = cb.empty() ? 0 : *std::max_element(cb.begin(), cb.end()) + 1;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(nb), std::vector<int>(static_cast<std::size_t>(na), 0));
  std::vector<bool> seen(static_cast<std::size_t>(na), false);
  for (std::size_t v = 0; v < ca.size(); ++v) {
    if (seen[ca[v]]) continue;
    seen[ca[v]] = true;
    m[cb[f.image[0][v].cell]][ca[v]] = 1;
  }
  return m;
}

namespace {

constexpr std::uint64_t kPrime = 2147483647;

std::uint64_t inverse_mod(std::uint64_t a) {
  std::uint64_t r = 1, e = kPrime - 2;
  while (e) {
    if (e & 1) r = r * a % kPrime;
    a = a * a % kPrime;
    e >>= 1;
  }
  return r;
}

using ModVec = std::map<int, std::uint64_t>;

std::uint64_t to_mod(std::int64_t v) {
  const std::int64_t m = v % static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(kPrime) : m);
}

// Echelon basis keyed by leading (largest) index; vectors stored monic.
class Echelon {
 public:
  /// Reduces v in place; returns true if it was independent (and stores it).
  bool insert(ModVec v, ModVec* trace = nullptr, ModVec tag = {}) {
    ModVec t = std::move(tag);
    while (!v.empty()) {
      auto lead = std::prev(v.end());
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        const std::uint64_t inv = inverse_mod(lead->second);
        for (auto& [k, x] : v) x = x * inv % kPrime;
        for (auto& [k, x] : t) x = x * inv % kPrime;
        pivots_.emplace(lead->first, std::make_pair(std::move(v), std::move(t)));
        return true;
      }
      const std::uint64_t c = lead->second;
      axpy(v, it->second.first, c);
      axpy(t, it->second.second, c);
    }
    if (trace) *trace = std::move(t);
    return false;
  }
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  // v -= c * w
  static void axpy(ModVec& v, const ModVec& w, std::uint64_t c) {
    for (const auto& [k, x] : w) {
      std::uint64_t& y = v[k];
      y = (y + kPrime - c * x % kPrime) % kPrime;
      if (y == 0) v.erase(k);
    }
  }
  std::map<int, std::pair<ModVec, ModVec>> pivots_;
};

ModVec column(const SparseMatrix& m, int j) {
  ModVec v;
  for (const auto& [r, x] : m.columns[j]) {
    const std::uint64_t y = to_mod(x);
    if (y) v[r] = y;
  }
  return v;
}

}  // namespace

int induced_rank(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f, int d) {
  const ChainComplex ca = chains(a, d, false), cb = chains(b, d + 1, false);
  // Cycles of a: kernel of the degree-d boundary, via traced elimination.
  std::vector<ModVec> cycles;
  Echelon ker;
  for (int j = 0; j < ca.rank[d]; ++j) {
    ModVec trace;
    ModVec v = d == 0 ? ModVec{} : column(ca.boundary[d], j);
    if (!ker.insert(std::move(v), &trace, ModVec{{j, 1}})) cycles.push_back(std::move(trace));
  }
  Echelon img;
  for (int j = 0; j < cb.rank[d + 1]; ++j) img.insert(column(cb.boundary[d + 1], j));
  const int base = img.rank();
  for (const auto& z : cycles) {
    ModVec w;
    for (const auto& [c, x] : z) {
      const Simplex& s = f.image[d][c];
      if (!s.nondegenerate()) continue;
      std::uint64_t& y = w[s.cell];
      y = (y + x) % kPrime;
      if (y == 0) w.erase(s.cell);
    }
    img.insert(std::move(w));
  }
  return img.rank() - base;
}

}  // namespace towerkit
