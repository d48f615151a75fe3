#include "towerkit/tuple_complex.hpp"

#include <algorithm>
#include <string>

#include "towerkit/errors.hpp"

namespace towerkit {

SimplicialComplex tuple_complex(const std::vector<const SimplicialComplex*>& components,
                                std::vector<std::vector<int>> tuples) {
  const std::size_t k = components.size();
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  const int n = static_cast<int>(tuples.size());

  std::vector<std::string> labels;
  labels.reserve(tuples.size());
  for (const auto& t : tuples) {
    if (t.size() != k) throw InvariantError("tuple_complex: tuple arity mismatch");
    std::string l = "(";
    for (std::size_t c = 0; c < k; ++c) l += (c ? "," : "") + components[c]->labels().at(t[c]);
    labels.push_back(l + ")");
  }

  // Successors: componentwise >= with every coordinate pair an edge (or equal).
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool ok = true;
      for (std::size_t c = 0; c < k && ok; ++c) {
        int x = tuples[a][c], y = tuples[b][c];
        ok = x <= y && components[c]->has_edge(x, y);
      }
      if (ok) succ[a].push_back(b);
    }
  }

  std::vector<std::vector<int>> faces;
  std::vector<int> chain;
  // proj[c] is the projected face of the current chain in component c.
  std::vector<std::vector<int>> proj(k);
  auto rec = [&](auto&& self, int last) -> void {
    faces.push_back(chain);
    for (int w : succ[last]) {
      bool ok = true;
      std::vector<char> grew(k, 0);
      for (std::size_t c = 0; c < k; ++c) {
        int y = tuples[w][c];
        if (y != proj[c].back()) {
          proj[c].push_back(y);
          grew[c] = 1;
          if (proj[c].size() > 2 && !components[c]->contains(proj[c])) ok = false;
        }
      }
      if (ok) {
        chain.push_back(w);
        self(self, w);
        chain.pop_back();
      }
      for (std::size_t c = 0; c < k; ++c)
        if (grew[c]) proj[c].pop_back();
    }
  };
  for (int v = 0; v < n; ++v) {
    chain = {v};
    for (std::size_t c = 0; c < k; ++c) proj[c] = {tuples[v][c]};
    rec(rec, v);
  }
  return SimplicialComplex::from_faces(labels, faces);
}

}  // namespace towerkit
