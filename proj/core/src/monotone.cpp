#include "towerkit/monotone.hpp"

#include <algorithm>
#include <cassert>

namespace towerkit {

Mono identity_map(int n) {
  Mono m(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) m[i] = i;
  return m;
}

Mono coface_map(int n, int i) {
  Mono m;
  m.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t <= n; ++t)
    if (t != i) m.push_back(t);
  return m;
}

Mono codegeneracy_map(int n, int j) {
  Mono m;
  m.reserve(static_cast<std::size_t>(n + 2));
  for (int t = 0; t <= n + 1; ++t) m.push_back(t <= j ? t : t - 1);
  return m;
}

Mono compose(const Mono& g, const Mono& f) {
  Mono out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[static_cast<std::size_t>(f[i])];
  return out;
}

bool is_monotone(const Mono& f, int target) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] > target) return false;
    if (i > 0 && f[i] < f[i - 1]) return false;
  }
  return true;
}

bool is_surjective(const Mono& f, int target) {
  if (f.empty()) return target < 0;
  if (f.front() != 0 || f.back() != target) return false;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] - f[i - 1] > 1) return false;
  return true;
}

bool is_injective(const Mono& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] == f[i - 1]) return false;
  return true;
}

EpiMono epi_mono(const Mono& f) {
  EpiMono r;
  r.epi.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == 0 || f[i] != f[i - 1]) r.mono.push_back(f[i]);
    r.epi.push_back(static_cast<int>(r.mono.size()) - 1);
  }
  return r;
}

namespace {
void monotone_rec(int k, int n, Mono& cur, std::vector<Mono>& out) {
  if (static_cast<int>(cur.size()) == k + 1) {
    out.push_back(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    monotone_rec(k, n, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Mono> all_monotone(int k, int n) {
  std::vector<Mono> out;
  if (k < 0 || n < 0) return out;
  Mono cur;
  monotone_rec(k, n, cur, out);
  return out;
}

std::vector<Mono> all_surjections(int k, int m) {
  std::vector<Mono> out;
  for (auto& f : all_monotone(k, m))
    if (is_surjective(f, m)) out.push_back(std::move(f));
  return out;
}

std::vector<int> degeneracy_word(const Mono& surj) {
  std::vector<int> word;
  for (int j = static_cast<int>(surj.size()) - 2; j >= 0; --j)
    if (surj[j] == surj[j + 1]) word.push_back(j);
  return word;
}

std::vector<ElementaryStep> elementary_factors(const Mono& theta, int target) {
  // theta = mono o epi. The epi is a composite of codegeneracies, the mono of cofaces.
  EpiMono em = epi_mono(theta);
  std::vector<ElementaryStep> steps;
  // epi [k] ->> [r]: collapse positions j where epi(j) == epi(j+1), highest first so
  // lower indices stay valid: sigma^{j} applied in increasing degree order.
  int k = static_cast<int>(theta.size()) - 1;
  [[maybe_unused]] int r = static_cast<int>(em.mono.size()) - 1;
  std::vector<int> collapse;
  for (int j = 0; j < k; ++j)
    if (em.epi[j] == em.epi[j + 1]) collapse.push_back(j);
  // Applying sigma^{j} for collapse positions from largest to smallest in source coordinates.
  int deg = k;
  for (auto it = collapse.rbegin(); it != collapse.rend(); ++it) {
    steps.push_back({false, *it, deg - 1});
    --deg;
  }
  assert(deg == r);
  // mono [r] >-> [target]: insert missing values in increasing order.
  std::vector<bool> hit(static_cast<std::size_t>(target + 1), false);
  for (int v : em.mono) hit[v] = true;
  for (int v = 0; v <= target; ++v) {
    if (!hit[v]) {
      steps.push_back({true, v, deg + 1});
      ++deg;
    }
  }
  assert(deg == target);
  return steps;
}

std::string mono_to_string(const Mono& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + ")";
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace towerkit
