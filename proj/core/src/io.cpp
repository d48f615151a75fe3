#include "towerkit/io.hpp"

#include <algorithm>
#include <unordered_map>

#include "towerkit/errors.hpp"

namespace towerkit {

nlohmann::ordered_json complex_to_json(const SimplicialComplex& k) {
  nlohmann::ordered_json j;
  j["vertices"] = k.labels();
  j["facets"] = k.facets();
  return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
    throw ParseError("complex JSON needs \"vertices\" and \"facets\"", 0);
  std::vector<std::string> labels;
  for (const auto& v : j.at("vertices")) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  std::unordered_map<std::string, int> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!by_label.emplace(labels[i], static_cast<int>(i)).second) throw ParseError("duplicate vertex " + labels[i], 0);
  std::vector<std::vector<int>> facets;
  for (const auto& f : j.at("facets")) {
    std::vector<int> face;
    for (const auto& v : f) {
      int idx;
      if (v.is_number_integer()) {
        idx = v.get<int>();
      } else {
        auto it = by_label.find(v.get<std::string>());
        if (it == by_label.end()) throw ParseError("unknown vertex " + v.get<std::string>(), 0);
        idx = it->second;
      }
      if (idx < 0 || idx >= static_cast<int>(labels.size())) throw ParseError("vertex index out of range", 0);
      face.push_back(idx);
    }
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) throw ParseError("repeated vertex in facet", 0);
    facets.push_back(face);
  }
  return SimplicialComplex::from_facets(labels, facets);
}

nlohmann::ordered_json sset_to_json(const SimplicialSet& x) {
  nlohmann::ordered_json j;
  j["bound"] = x.bound();
  j["complete"] = x.complete();
  nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
  for (int n = 0; n <= x.bound(); ++n) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < x.cell_count(n); ++c) {
      nlohmann::ordered_json cell;
      cell["label"] = x.label(n, static_cast<int>(c));
      if (n > 0) {
        nlohmann::ordered_json faces = nlohmann::ordered_json::array();
        for (int i = 0; i <= n; ++i) {
          const Simplex& f = x.face(n, static_cast<int>(c), i);
          faces.push_back({{"cell", f.cell}, {"degeneracy", f.degeneracy_word()}});
        }
        cell["faces"] = faces;
      }
      cells.push_back(cell);
    }
    degrees.push_back({{"degree", n}, {"cells", cells}});
  }
  j["degrees"] = degrees;
  return j;
}

nlohmann::ordered_json homology_to_json(const HomologyResult& h) {
  nlohmann::ordered_json j;
  j["reduced"] = h.reduced;
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (const auto& g : h.groups) {
    std::vector<std::string> torsion;
    for (const auto& t : g.torsion) torsion.push_back(t.str());
    groups.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}});
  }
  j["groups"] = groups;
  return j;
}

}  // namespace towerkit
