#pragma once

// Brute-force homology used to freeze expected values. Shares nothing with the
// library's chain construction or Smith form: it walks every simplex (degenerate
// ones included), builds dense boundary matrices and takes ranks by modular
// elimination.

#include <cstdint>
#include <vector>

#include "towerkit/simplicial_set.hpp"

namespace oracle {

enum class Chains {
  unnormalized,  ///< every simplex is a basis element
  quotient,      ///< degenerate simplices set to zero
};

/// Rank of a dense integer matrix modulo a prime.
int rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p);
/// Rank over Q, taken as the largest rank modulo two large primes.
int rank_q(const std::vector<std::vector<std::int64_t>>& m);

/// Dense boundary matrix from degree n to degree n-1 (rows: degree n-1). Degree 0
/// maps to the augmentation row when `reduced`.
std::vector<std::vector<std::int64_t>> boundary(const towerkit::SimplicialSet& x, int n, Chains chains, bool reduced);

/// Reduced Betti numbers for degrees -1..top over Q (p = 0) or GF(p). Needs x known
/// through top + 1.
std::vector<int> reduced_betti(const towerkit::SimplicialSet& x, int top, Chains chains, std::int64_t p = 0);

}  // namespace oracle
