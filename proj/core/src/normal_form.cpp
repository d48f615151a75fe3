#include "towerkit/normal_form.hpp"

namespace towerkit {

Key make_key(const std::vector<int>& v) {
  Key k(v.size(), u'\0');
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > 0xffff) throw UnsupportedError("key entry out of range");
    k[i] = static_cast<char16_t>(v[i]);
  }
  return k;
}

std::vector<int> key_values(const Key& k) {
  std::vector<int> v(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) v[i] = static_cast<int>(k[i]);
  return v;
}

NormalForm normalize(const SimplexSource& src, int bound, bool complete, const Limits& limits,
                     const std::string& what) {
  NormalForm nf;
  nf.set = SimplicialSet(bound, complete);
  nf.forms.resize(static_cast<std::size_t>(bound + 1));
  for (int n = 0; n <= bound; ++n) {
    std::vector<Key> keys = src.enumerate(n);
    if (keys.size() > limits.cap) throw CapExceeded(what, n, limits.cap);
    auto& forms = nf.forms[n];
    forms.reserve(keys.size());
    for (const auto& k : keys)
      if (!forms.emplace(k, Simplex{}).second) throw InvariantError(what + ": simplex enumerated twice");
    if (n > 0) {
      for (const auto& [k, form] : nf.forms[n - 1]) {
        for (int j = 0; j < n; ++j) {
          Key d = src.degeneracy(n - 1, k, j);
          Simplex s = nf.set.degeneracy_of(form, j);
          auto it = forms.find(d);
          if (it == forms.end()) throw InvariantError(what + ": degeneracy leaves the enumeration");
          if (it->second.cell >= 0 && it->second != s)
            throw InvariantError(what + ": degenerate simplex with two normal forms");
          it->second = s;
        }
      }
    }
    for (const auto& k : keys) {
      Simplex& s = forms[k];
      if (s.cell >= 0) continue;
      std::vector<Simplex> faces;
      if (n > 0) {
        faces.reserve(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i) {
          auto it = nf.forms[n - 1].find(src.face(n, k, i));
          if (it == nf.forms[n - 1].end()) throw InvariantError(what + ": face leaves the enumeration");
          faces.push_back(it->second);
        }
      }
      int c = nf.set.add_cell(n, std::move(faces), src.label ? src.label(n, k) : std::string{});
      s = Simplex::cell_at(n, c);
    }
  }
  return nf;
}

}  // namespace towerkit
