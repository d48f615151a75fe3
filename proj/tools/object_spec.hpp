#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "towerkit/errors.hpp"
#include "towerkit/simplicial_complex.hpp"
#include "towerkit/simplicial_set.hpp"

namespace towerkit::cli {

/// Whitespace-separated word with its offset in the spec string.
struct Token {
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& spec);

/// "key=value" split; nullopt when the token has no '='.
std::optional<std::pair<std::string, std::string>> key_value(const Token& t);
int parse_int(const std::string& text, std::size_t pos);
/// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& text, std::size_t pos);

/// A name from the corpus or "@path" to a complex JSON file.
SimplicialComplex resolve_complex(const std::string& word, std::size_t pos);

struct BuiltObject {
  std::string kind;  ///< "complex" or "sset"
  std::optional<SimplicialComplex> complex;
  std::optional<SimplicialSet> set;

  /// The object as a simplicial set; complexes are complete, sets are as built.
  SimplicialSet as_set() const;
};

/// Object mini-language:
///   NAME | @file | simplex n=N [k=K] | boundary n=N | cycle n=N | complete n=N
///   bipartite a=A b=B | join A B | wedge A B | union A B | cone A | suspension A
///   subdivision A | sk k=K of OBJECT | Xk k=K p=P | Yk k=K p=P
///   sk0-join-power k=K p=P X=A | cech points=Z bound=B
BuiltObject build_object(const std::string& spec);

}  // namespace towerkit::cli
