#pragma once

#include <string>

#include <json.hpp>

#include "towerkit/homalg.hpp"
#include "towerkit/simplicial_complex.hpp"
#include "towerkit/simplicial_set.hpp"

namespace towerkit {

/// {"vertices": [labels], "facets": [[indices]]}
nlohmann::ordered_json complex_to_json(const SimplicialComplex& k);
/// Accepts facets as vertex indices or vertex labels.
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// Cells per degree with labels and face lists of nondegenerate normal forms.
nlohmann::ordered_json sset_to_json(const SimplicialSet& x);

/// [{"degree", "betti", "torsion"}], plus the reduced flag.
nlohmann::ordered_json homology_to_json(const HomologyResult& h);

}  // namespace towerkit
