#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "towerkit/errors.hpp"
#include "towerkit/homalg.hpp"
#include "towerkit/simplicial_complex.hpp"

namespace towerkit {

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
  /// Homological connectivity equals the real one (simply connected or dimension <= 1).
  bool connectivity_trusted = false;
};

/// Fixed corpus: point, S0, S1, S2, D0..D4, two disjoint unions, two wedges, K22.
const std::vector<NamedComplex>& corpus();

/// Corpus names plus "D<n>" (simplex), "S<n>" (boundary of D<n+1>), "empty", "pt".
/// Throws ParseError for anything else.
SimplicialComplex named_complex(const std::string& name);

struct SuiteCase {
  std::string input;
  std::string expected;
  std::string observed;
  std::string verdict;  ///< "pass", "fail" or "capped"
  std::string claim;    ///< statement the case checks
  std::string note;
  double seconds = 0;   ///< wall time; only emitted on request
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteCase> cases;

  /// No case failed (capped cases do not fail a suite).
  bool passed() const;
  std::size_t count(const std::string& verdict) const;
  nlohmann::ordered_json to_json(bool timings = false) const;
  std::string to_table(bool timings = false) const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Cap errors become capped or failed cases, never exceptions.
/// Throws UnsupportedError for an unknown name.
SuiteResult run_suite(const std::string& name, const Limits& limits = {});

/// "H~ -1:0 0:1 1:0" with torsion as "+Z/2".
std::string describe(const HomologyResult& h);

}  // namespace towerkit
