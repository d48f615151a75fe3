#include "object_spec.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>

#include "towerkit/cosimplicial.hpp"
#include "towerkit/io.hpp"
#include "towerkit/sset.hpp"
#include "towerkit/suites.hpp"

namespace towerkit::cli {

std::vector<Token> tokenize(const std::string& spec) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < spec.size()) {
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
    if (i == spec.size()) break;
    const std::size_t start = i;
    while (i < spec.size() && !std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
    out.push_back({spec.substr(start, i - start), start});
  }
  return out;
}

std::optional<std::pair<std::string, std::string>> key_value(const Token& t) {
  const auto eq = t.text.find('=');
  if (eq == std::string::npos || eq == 0) return std::nullopt;
  return std::make_pair(t.text.substr(0, eq), t.text.substr(eq + 1));
}

int parse_int(const std::string& text, std::size_t pos) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("expected an integer, got '" + text + "'", pos);
  return v;
}

std::pair<int, int> parse_range(const std::string& text, std::size_t pos) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text, pos);
    return {v, v};
  }
  const int a = parse_int(text.substr(0, dots), pos);
  const int b = parse_int(text.substr(dots + 2), pos + dots + 2);
  if (b < a) throw ParseError("empty range '" + text + "'", pos);
  return {a, b};
}

SimplicialComplex resolve_complex(const std::string& word, std::size_t pos) {
  if (!word.empty() && word[0] == '@') {
    std::ifstream in(word.substr(1));
    if (!in) throw ParseError("cannot read '" + word.substr(1) + "'", pos + 1);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(word.substr(1) + ": " + e.what(), pos + 1);
    }
    if (j.contains("complex")) j = j.at("complex");
    return complex_from_json(j);
  }
  try {
    return named_complex(word);
  } catch (const ParseError&) {
    throw ParseError("unknown complex '" + word + "'", pos);
  }
}

SimplicialSet BuiltObject::as_set() const { return set ? *set : complex_to_sset(*complex); }

namespace {

class Parser {
 public:
  explicit Parser(const std::string& spec) : tokens_(tokenize(spec)), end_(spec.size()) {}

  BuiltObject parse_all() {
    BuiltObject b = object();
    if (i_ < tokens_.size()) throw ParseError("unexpected '" + tokens_[i_].text + "'", tokens_[i_].pos);
    return b;
  }

 private:
  const Token& next(const std::string& what) {
    if (i_ >= tokens_.size()) throw ParseError("expected " + what, end_);
    return tokens_[i_++];
  }

  /// Consumes key=value tokens following the head word.
  std::map<std::string, Token> keys() {
    std::map<std::string, Token> out;
    while (i_ < tokens_.size()) {
      const auto kv = key_value(tokens_[i_]);
      if (!kv) break;
      const std::size_t vpos = tokens_[i_].pos + kv->first.size() + 1;
      if (!out.emplace(kv->first, Token{kv->second, vpos}).second)
        throw ParseError("repeated key '" + kv->first + "'", tokens_[i_].pos);
      ++i_;
    }
    return out;
  }

  static int need_int(const std::map<std::string, Token>& kv, const std::string& key, std::size_t head_pos,
                      int lo, int hi) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing " + key + "=", head_pos);
    const int v = parse_int(it->second.text, it->second.pos);
    if (v < lo || v > hi)
      throw ParseError(key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", it->second.pos);
    return v;
  }

  static void only(const std::map<std::string, Token>& kv, std::initializer_list<const char*> allowed) {
    for (const auto& [k, t] : kv) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) throw ParseError("unknown key '" + k + "'", t.pos - k.size() - 1);
    }
  }

  SimplicialComplex atom() {
    const Token& t = next("a complex name or @file");
    return resolve_complex(t.text, t.pos);
  }

  static BuiltObject of(SimplicialComplex c) { return BuiltObject{"complex", std::move(c), std::nullopt}; }

  BuiltObject object() {
    const Token head = next("an object");
    const std::string& h = head.text;
    if (h == "simplex") {
      const auto kv = keys();
      only(kv, {"n", "k"});
      const int n = need_int(kv, "n", head.pos, 0, 12);
      const int k = kv.count("k") ? need_int(kv, "k", head.pos, 0, n) : n;
      return of(simplex_complex(n, k));
    }
    if (h == "boundary" || h == "cycle" || h == "complete") {
      const auto kv = keys();
      only(kv, {"n"});
      const int n = need_int(kv, "n", head.pos, h == "cycle" ? 3 : 1, 12);
      return of(h == "boundary" ? simplex_boundary(n) : h == "cycle" ? cycle_graph(n) : complete_graph(n));
    }
    if (h == "bipartite") {
      const auto kv = keys();
      only(kv, {"a", "b"});
      return of(complete_bipartite(need_int(kv, "a", head.pos, 1, 12), need_int(kv, "b", head.pos, 1, 12)));
    }
    if (h == "join" || h == "wedge" || h == "union") {
      const SimplicialComplex a = atom();
      const SimplicialComplex b = atom();
      return of(h == "join" ? join(a, b) : h == "wedge" ? wedge(a, b) : disjoint_union(a, b));
    }
    if (h == "cone" || h == "suspension" || h == "subdivision") {
      const SimplicialComplex a = atom();
      return of(h == "cone" ? cone(a) : h == "suspension" ? suspension(a) : subdivision(a));
    }
    if (h == "sk") {
      const auto kv = keys();
      only(kv, {"k"});
      const int k = need_int(kv, "k", head.pos, 0, 64);
      const Token& w = next("'of'");
      if (w.text != "of") throw ParseError("expected 'of'", w.pos);
      BuiltObject inner = object();
      if (inner.complex) return of(complex_skeleton(*inner.complex, k));
      inner.set = skeleton(*inner.set, k);
      return inner;
    }
    if (h == "Xk" || h == "Yk" || h == "sk0-join-power") {
      const auto kv = keys();
      only(kv, {"k", "p", "X"});
      const int k = need_int(kv, "k", head.pos, 0, 6);
      const int p = need_int(kv, "p", head.pos, 0, 6);
      SimplicialComplex x = empty_complex();
      if (h == "sk0-join-power") {
        const auto it = kv.find("X");
        if (it == kv.end()) throw ParseError("missing X=", head.pos);
        x = resolve_complex(it->second.text, it->second.pos);
      } else if (kv.count("X")) {
        throw ParseError("X= only applies to sk0-join-power", kv.at("X").pos);
      }
      return of(cosimplicial_family(parse_family(h), k, x, p).level(p));
    }
    if (h == "cech") {
      const auto kv = keys();
      only(kv, {"points", "bound"});
      const int z = need_int(kv, "points", head.pos, 1, 8);
      const int bound = need_int(kv, "bound", head.pos, 0, 6);
      BuiltObject b;
      b.kind = "sset";
      b.set = cech_power(z, 0, bound).nf.set;
      return b;
    }
    if (key_value(head)) throw ParseError("expected an object before '" + h + "'", head.pos);
    return of(resolve_complex(h, head.pos));
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
  std::size_t end_;
};

}  // namespace

BuiltObject build_object(const std::string& spec) { return Parser(spec).parse_all(); }

}  // namespace towerkit::cli
