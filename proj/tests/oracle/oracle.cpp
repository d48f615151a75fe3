#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace oracle {

int rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  auto mulmod = [p](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
  };
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const std::int64_t f = mulmod(m[r][c], iv);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - mulmod(f, m[rank][k])) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

int rank_q(const std::vector<std::vector<std::int64_t>>& m) {
  return std::max(rank_mod(m, 2305843009213693951LL), rank_mod(m, 1000000007LL));
}

namespace {

std::vector<towerkit::Simplex> basis(const towerkit::SimplicialSet& x, int n, Chains chains) {
  std::vector<towerkit::Simplex> all = x.all_simplices(n);
  if (chains == Chains::quotient)
    all.erase(std::remove_if(all.begin(), all.end(), [](const towerkit::Simplex& s) { return !s.nondegenerate(); }),
              all.end());
  return all;
}

}  // namespace

std::vector<std::vector<std::int64_t>> boundary(const towerkit::SimplicialSet& x, int n, Chains chains, bool reduced) {
  const auto src = basis(x, n, chains);
  if (n == 0) {
    if (!reduced) return {};
    return {std::vector<std::int64_t>(src.size(), 1)};
  }
  const auto tgt = basis(x, n - 1, chains);
  std::map<towerkit::Simplex, std::size_t> index;
  for (std::size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = i;
  std::vector<std::vector<std::int64_t>> m(tgt.size(), std::vector<std::int64_t>(src.size(), 0));
  for (std::size_t c = 0; c < src.size(); ++c)
    for (int i = 0; i <= n; ++i) {
      const towerkit::Simplex f = x.face_of(src[c], i);
      const auto it = index.find(f);
      if (it == index.end()) continue;  // degenerate face, zero in the quotient
      m[it->second][c] += (i % 2 == 0) ? 1 : -1;
    }
  return m;
}

std::vector<int> reduced_betti(const towerkit::SimplicialSet& x, int top, Chains chains, std::int64_t p) {
  auto rank = [&](int n) {
    if (n > top + 1) return 0;
    const auto m = boundary(x, n, chains, true);
    return p == 0 ? rank_q(m) : rank_mod(m, p);
  };
  std::vector<int> out;
  // Degree -1: the augmentation target has dimension 1.
  out.push_back(1 - rank(0));
  for (int n = 0; n <= top; ++n) {
    const int dim = static_cast<int>(basis(x, n, chains).size());
    out.push_back(dim - rank(n) - rank(n + 1));
  }
  return out;
}

}  // namespace oracle
