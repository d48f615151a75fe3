#pragma once

#include <vector>

#include "towerkit/simplicial_complex.hpp"

namespace towerkit {

/// Complex on a set of vertex tuples (one coordinate per component complex).
///
/// Tuples are ordered lexicographically. A face is a chain in the componentwise
/// order whose projection to every component is a face there. With all tuples this
/// is the iterated product; with a subset closed under the limit condition it is a
/// finite limit of complexes.
SimplicialComplex tuple_complex(const std::vector<const SimplicialComplex*>& components,
                                std::vector<std::vector<int>> tuples);

}  // namespace towerkit
