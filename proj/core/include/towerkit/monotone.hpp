#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace towerkit {

/// A monotone map [k] -> [n] stored as its value list (size k+1).
using Mono = std::vector<int>;

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ v.size();
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Mono identity_map(int n);
/// delta^i : [n-1] -> [n], skips i.
Mono coface_map(int n, int i);
/// sigma^j : [n+1] -> [n], hits j twice.
Mono codegeneracy_map(int n, int j);
/// g after f.
Mono compose(const Mono& g, const Mono& f);

bool is_monotone(const Mono& f, int target);
bool is_surjective(const Mono& f, int target);
bool is_injective(const Mono& f);

/// f = mono o epi with epi : [k] ->> [r] and mono : [r] >-> [n].
struct EpiMono {
  Mono epi;
  Mono mono;
};
EpiMono epi_mono(const Mono& f);

/// All monotone maps [k] -> [n] in lexicographic order.
std::vector<Mono> all_monotone(int k, int n);
/// All monotone surjections [k] ->> [m] in lexicographic order.
std::vector<Mono> all_surjections(int k, int m);

/// Strictly decreasing degeneracy word s_{j1} ... s_{jt} of a surjection.
std::vector<int> degeneracy_word(const Mono& surj);

/// Elementary factorisation theta = d^{i1} ... d^{ia} s^{j1} ... s^{jb} (applied right to left).
/// Each step is (is_coface, index, target degree of the step).
struct ElementaryStep {
  bool coface;
  int index;
  int target;
};
std::vector<ElementaryStep> elementary_factors(const Mono& theta, int target);

std::string mono_to_string(const Mono& f);

long long binomial(int n, int k);

}  // namespace towerkit
