#include "towerkit/simplicial_set.hpp"

#include <algorithm>

#include "towerkit/errors.hpp"

namespace towerkit {

Mono Simplex::surjection() const {
  Mono s(static_cast<std::size_t>(degree + 1));
  int v = 0;
  for (int t = 0; t <= degree; ++t) {
    s[t] = v;
    if (t < degree && !(collapse & (1u << t))) ++v;
  }
  return s;
}

std::vector<int> Simplex::degeneracy_word() const {
  std::vector<int> w;
  for (int j = degree - 1; j >= 0; --j)
    if (collapse & (1u << j)) w.push_back(j);
  return w;
}

Simplex Simplex::from_surjection(const Mono& surj, int cell) {
  Simplex s;
  s.degree = static_cast<int>(surj.size()) - 1;
  s.cell = cell;
  if (s.degree > 31) throw UnsupportedError("simplex degree above 31");
  for (int j = 0; j < s.degree; ++j)
    if (surj[j] == surj[j + 1]) s.collapse |= 1u << j;
  return s;
}

namespace {

// y is a simplex of degree m-1... composed with a surjection e : [k] ->> [y.degree].
Simplex precompose_surjection(const Simplex& y, const Mono& e) {
  if (y.collapse == 0) return Simplex::from_surjection(e, y.cell);
  return Simplex::from_surjection(compose(y.surjection(), e), y.cell);
}

}  // namespace

int SimplicialSet::dimension() const {
  for (int n = static_cast<int>(faces_.size()) - 1; n >= 0; --n)
    if (!faces_[n].empty()) return n;
  return -1;
}

void SimplicialSet::known_through(int d, const std::string& what) const {
  if (d > bound_ && !complete_) throw BoundError(d, bound_, what);
}

std::size_t SimplicialSet::cell_count(int n) const {
  if (n < 0) return 0;
  known_through(n, "cell_count");
  return n < static_cast<int>(faces_.size()) ? faces_[n].size() : 0;
}

std::vector<std::size_t> SimplicialSet::cell_counts() const {
  std::vector<std::size_t> c;
  int top = complete_ ? std::max(dimension(), 0) : bound_;
  for (int n = 0; n <= top; ++n) c.push_back(cell_count(n));
  return c;
}

std::uint64_t SimplicialSet::simplex_count(int n) const {
  std::uint64_t t = 0;
  for (int m = 0; m <= n; ++m) t += cell_count(m) * static_cast<std::uint64_t>(binomial(n, m));
  return t;
}

Simplex SimplicialSet::face_of(const Simplex& x, int i) const {
  if (x.degree <= 0) throw InvariantError("face of a vertex");
  if (x.collapse == 0) return faces_[x.degree][x.cell][i];
  const int m = x.base_degree();
  Mono g = compose(x.surjection(), coface_map(x.degree - 1 + 1, i));
  // g : [degree-1] -> [m] misses at most one value.
  if (is_surjective(g, m)) return Simplex::from_surjection(g, x.cell);
  int missing = 0;
  while (std::binary_search(g.begin(), g.end(), missing)) ++missing;
  for (int& v : g)
    if (v > missing) --v;
  return precompose_surjection(faces_[m][x.cell][missing], g);
}

Simplex SimplicialSet::degeneracy_of(const Simplex& x, int j) const {
  Mono s = compose(x.surjection(), codegeneracy_map(x.degree, j));
  return Simplex::from_surjection(s, x.cell);
}

Simplex SimplicialSet::apply(const Simplex& x, const Mono& theta) const {
  Mono g = compose(x.surjection(), theta);
  EpiMono em = epi_mono(g);
  const int m = x.base_degree();
  Simplex y = Simplex::cell_at(m, x.cell);
  for (int a = m; a >= 0; --a)
    if (!std::binary_search(em.mono.begin(), em.mono.end(), a)) y = face_of(y, a);
  return precompose_surjection(y, em.epi);
}

std::vector<Simplex> SimplicialSet::all_simplices(int n) const {
  std::vector<Simplex> out;
  for (int m = 0; m <= n; ++m) {
    std::size_t cells = cell_count(m);
    if (cells == 0) continue;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (std::popcount(mask) == n - m) masks.push_back(mask);
    for (std::size_t c = 0; c < cells; ++c)
      for (auto mask : masks) out.push_back({n, static_cast<int>(c), mask});
  }
  return out;
}

void SimplicialSet::check_identities() const {
  const int top = complete_ ? std::max(dimension(), 0) : bound_;
  auto fail = [](const std::string& msg) { throw InvariantError("simplicial identity violated: " + msg); };
  for (int n = 1; n <= top; ++n) {
    for (std::size_t c = 0; c < cell_count(n); ++c) {
      const auto& fs = faces_[n][c];
      if (static_cast<int>(fs.size()) != n + 1) fail("face table arity");
      for (const auto& f : fs) {
        if (f.degree != n - 1 || f.cell < 0 || f.base_degree() < 0 ||
            f.cell >= static_cast<int>(cell_count(f.base_degree())) || (n - 1 < 32 && (f.collapse >> std::max(n - 1, 0))))
          fail("malformed face in degree " + std::to_string(n));
      }
    }
  }
  for (int n = 0; n <= top; ++n) {
    for (std::size_t c = 0; c < cell_count(n); ++c) {
      Simplex x = Simplex::cell_at(n, static_cast<int>(c));
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (n >= 2 && face_of(face_of(x, j), i) != face_of(face_of(x, i), j - 1))
            fail("d_i d_j in degree " + std::to_string(n));
      for (int j = 0; j <= n; ++j) {
        Simplex sx = degeneracy_of(x, j);
        for (int i = 0; i <= n + 1; ++i) {
          Simplex lhs = face_of(sx, i);
          Simplex rhs;
          if (i < j)
            rhs = n == 0 ? x : degeneracy_of(face_of(x, i), j - 1);
          else if (i == j || i == j + 1)
            rhs = x;
          else
            rhs = degeneracy_of(face_of(x, i - 1), j);
          if (lhs != rhs) fail("d_i s_j in degree " + std::to_string(n));
        }
        for (int i = 0; i <= j; ++i)
          if (degeneracy_of(degeneracy_of(x, j), i) != degeneracy_of(degeneracy_of(x, i), j + 1))
            fail("s_i s_j in degree " + std::to_string(n));
      }
    }
  }
}

bool SimplicialSet::same_structure(const SimplicialSet& o) const {
  if (bound_ != o.bound_ || complete_ != o.complete_) return false;
  const int top = std::max(dimension(), o.dimension());
  for (int n = 0; n <= top; ++n) {
    std::size_t a = n < static_cast<int>(faces_.size()) ? faces_[n].size() : 0;
    std::size_t b = n < static_cast<int>(o.faces_.size()) ? o.faces_[n].size() : 0;
    if (a != b) return false;
    for (std::size_t c = 0; c < a; ++c)
      if (faces_[n][c] != o.faces_[n][c]) return false;
  }
  return true;
}

void SimplicialSet::ensure_degree(int n) {
  if (static_cast<int>(faces_.size()) <= n) {
    faces_.resize(static_cast<std::size_t>(n + 1));
    labels_.resize(static_cast<std::size_t>(n + 1));
  }
}

int SimplicialSet::add_cell(int n, std::vector<Simplex> faces, std::string label) {
  ensure_degree(n);
  faces_[n].push_back(std::move(faces));
  labels_[n].push_back(std::move(label));
  return static_cast<int>(faces_[n].size()) - 1;
}

Simplex SimplicialMap::operator()(const SimplicialSet& /*target*/, const Simplex& x) const {
  const Simplex& img = image[x.base_degree()][x.cell];
  if (x.collapse == 0) return img;
  return precompose_surjection(img, x.surjection());
}

bool is_simplicial(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f, int through) {
  for (int n = 0; n <= through; ++n) {
    if (n >= static_cast<int>(f.image.size())) return source.cell_count(n) == 0;
    if (f.image[n].size() != source.cell_count(n)) return false;
    for (std::size_t c = 0; c < source.cell_count(n); ++c) {
      const Simplex& y = f.image[n][c];
      if (y.degree != n) return false;
      if (n == 0) continue;
      for (int i = 0; i <= n; ++i)
        if (f(target, source.face(n, static_cast<int>(c), i)) != target.face_of(y, i)) return false;
    }
  }
  return true;
}

SimplexTable::SimplexTable(const SimplicialSet& x, int through) : x_(&x), through_(through) {
  x.known_through(through, "SimplexTable");
  all_.resize(static_cast<std::size_t>(through + 1));
  ids_.resize(all_.size());
  bnd_.resize(all_.size());
  by_boundary_.resize(all_.size());
  for (int n = 0; n <= through; ++n) {
    all_[n] = x.all_simplices(n);
    for (std::size_t k = 0; k < all_[n].size(); ++k) ids_[n].emplace(all_[n][k], static_cast<int>(k));
    if (n == 0) continue;
    bnd_[n].resize(all_[n].size());
    for (std::size_t k = 0; k < all_[n].size(); ++k) {
      std::vector<int> b(static_cast<std::size_t>(n + 1));
      for (int i = 0; i <= n; ++i) b[i] = id(x.face_of(all_[n][k], i));
      by_boundary_[n][b].push_back(static_cast<int>(k));
      bnd_[n][k] = std::move(b);
    }
  }
}

int SimplexTable::id(const Simplex& s) const {
  auto it = ids_.at(s.degree).find(s);
  if (it == ids_[s.degree].end()) throw InvariantError("simplex not in table");
  return it->second;
}

const std::vector<int>& SimplexTable::with_boundary(int n, const std::vector<int>& face_ids) const {
  static const std::vector<int> none;
  auto it = by_boundary_.at(n).find(face_ids);
  return it == by_boundary_[n].end() ? none : it->second;
}

}  // namespace towerkit
