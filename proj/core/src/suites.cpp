#include "towerkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "towerkit/categories.hpp"
#include "towerkit/cosimplicial.hpp"
#include "towerkit/hom.hpp"
#include "towerkit/holim.hpp"
#include "towerkit/sset.hpp"

namespace towerkit {

const std::vector<NamedComplex>& corpus() {
  static const std::vector<NamedComplex> items = [] {
    std::vector<NamedComplex> v;
    v.push_back({"point", point_complex(), true});
    v.push_back({"S0", sphere0(), true});
    v.push_back({"S1", cycle_graph(3), true});
    v.push_back({"S2", simplex_boundary(3), true});
    for (int n = 1; n <= 4; ++n) v.push_back({"D" + std::to_string(n), simplex_complex(n), true});
    v.push_back({"S1+pt", disjoint_union(cycle_graph(3), point_complex()), true});
    v.push_back({"S0+S1", disjoint_union(sphere0(), cycle_graph(3)), true});
    v.push_back({"S1vS1", wedge(cycle_graph(3), cycle_graph(3)), true});
    v.push_back({"S1vS2", wedge(cycle_graph(3), simplex_boundary(3)), false});
    v.push_back({"K22", complete_bipartite(2, 2), true});
    return v;
  }();
  return items;
}

SimplicialComplex named_complex(const std::string& name) {
  for (const auto& c : corpus())
    if (c.name == name) return c.complex;
  if (name == "pt") return point_complex();
  if (name == "empty") return empty_complex();
  if (name.size() >= 2 && (name[0] == 'D' || name[0] == 'S') &&
      std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    const int n = std::stoi(name.substr(1));
    if (n > 12) throw ParseError("dimension too large in '" + name + "'", 1);
    return name[0] == 'D' ? simplex_complex(n) : (n == 0 ? sphere0() : simplex_boundary(n + 1));
  }
  throw ParseError("unknown complex '" + name + "'", 0);
}

std::string describe(const HomologyResult& h) {
  std::string s = h.reduced ? "H~" : "H";
  for (const auto& g : h.groups) {
    s += " " + std::to_string(g.degree) + ":" + std::to_string(g.betti);
    for (const auto& t : g.torsion) s += "+Z/" + t.str();
  }
  return s;
}

bool SuiteResult::passed() const { return count("fail") == 0; }

std::size_t SuiteResult::count(const std::string& verdict) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [&](const SuiteCase& c) { return c.verdict == verdict; }));
}

nlohmann::ordered_json SuiteResult::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["suite"] = name;
  j["passed"] = passed();
  j["counts"] = {{"pass", count("pass")}, {"fail", count("fail")}, {"capped", count("capped")}};
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json x;
    x["input"] = c.input;
    x["claim"] = c.claim;
    x["expected"] = c.expected;
    x["observed"] = c.observed;
    x["verdict"] = c.verdict;
    if (!c.note.empty()) x["note"] = c.note;
    if (timings) x["seconds"] = c.seconds;
    cs.push_back(x);
  }
  j["cases"] = cs;
  return j;
}

std::string SuiteResult::to_table(bool timings) const {
  std::size_t wi = 5, we = 8, wo = 8;
  for (const auto& c : cases) {
    wi = std::max(wi, c.input.size());
    we = std::max(we, c.expected.size());
    wo = std::max(wo, c.observed.size());
  }
  std::ostringstream os;
  os << "suite " << name << "\n";
  os << std::left << std::setw(static_cast<int>(wi)) << "input" << "  " << std::setw(static_cast<int>(we))
     << "expected" << "  " << std::setw(static_cast<int>(wo)) << "observed" << "  verdict";
  if (timings) os << "  seconds";
  os << "\n";
  for (const auto& c : cases) {
    os << std::setw(static_cast<int>(wi)) << c.input << "  " << std::setw(static_cast<int>(we)) << c.expected << "  "
       << std::setw(static_cast<int>(wo)) << c.observed << "  " << std::setw(7) << c.verdict;
    if (timings) os << "  " << std::fixed << std::setprecision(3) << c.seconds;
    os << "\n";
  }
  os << count("pass") << " pass, " << count("fail") << " fail, " << count("capped") << " capped\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"skeleta", "joins",   "figures", "cofinality", "contracting",
                                              "adjunction", "ez", "tnk", "towers"};
  return names;
}

namespace {

using Clock = std::chrono::steady_clock;

/// Runs one case; a cap error becomes "capped" when the suite allows it, otherwise "fail".
void run_case(SuiteResult& r, std::string input, std::string claim, bool cap_is_capped,
              const std::function<void(SuiteCase&)>& body) {
  SuiteCase c;
  c.input = std::move(input);
  c.claim = std::move(claim);
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const CapExceeded& e) {
    c.verdict = cap_is_capped ? "capped" : "fail";
    c.observed = "cap exceeded";
    c.note = e.what();
  } catch (const Error& e) {
    c.verdict = "fail";
    c.observed = "error";
    c.note = e.what();
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.cases.push_back(std::move(c));
}

void decide(SuiteCase& c) { c.verdict = c.expected == c.observed ? "pass" : "fail"; }

std::string f_vector_string(const std::vector<std::size_t>& f) {
  std::string s = "f=(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

HomologyResult complex_homology(const SimplicialComplex& k, int through) {
  return homology(complex_to_sset(k), through, true);
}

/// Homological connectivity: one below the first nonzero reduced group, or -1 for
/// "acyclic" (encoded as a large sentinel) when every group through the top vanishes.
constexpr int kAcyclic = 1 << 20;
int homological_connectivity(const SimplicialComplex& k) {
  const HomologyResult h = complex_homology(k, std::max(k.dimension(), 0));
  for (const auto& g : h.groups)
    if (g.betti != 0 || !g.torsion.empty()) return g.degree - 1;
  return kAcyclic;
}
std::string conn_string(int c) { return c >= kAcyclic ? "acyclic" : std::to_string(c); }

/// Frozen reduced Betti number of the k-skeleton of the n-simplex in degree k.
constexpr int kSkeletonRank[6][5] = {
    {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {2, 1, 0, 0, 0}, {3, 3, 1, 0, 0}, {4, 6, 4, 1, 0}, {5, 10, 10, 5, 1}};

SuiteResult suite_skeleta(const Limits&) {
  SuiteResult r{"skeleta", {}};
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < n; ++k)
      run_case(r, "sk" + std::to_string(k) + " D" + std::to_string(n), "skeleton of a simplex is a wedge of spheres",
               false, [&](SuiteCase& c) {
                 c.expected = "H~";
                 for (int d = -1; d <= k + 1; ++d) c.expected += " " + std::to_string(d) + ":" +
                                                                 std::to_string(d == k ? kSkeletonRank[n][k] : 0);
                 c.observed = describe(complex_homology(simplex_complex(n, k), k + 1));
                 decide(c);
               });
  return r;
}

SuiteResult suite_joins(const Limits&) {
  SuiteResult r{"joins", {}};
  const auto& items = corpus();
  for (const auto& a : items)
    for (const auto& b : items)
      run_case(r, "f " + a.name + "*" + b.name, "join f-vector is the shifted convolution", false, [&](SuiteCase& c) {
        const auto fa = a.complex.f_vector();
        const auto fb = b.complex.f_vector();
        std::vector<std::size_t> f(fa.size() + fb.size(), 0);
        for (std::size_t i = 0; i < fa.size(); ++i) f[i] += fa[i];
        for (std::size_t j = 0; j < fb.size(); ++j) f[j] += fb[j];
        for (std::size_t i = 0; i < fa.size(); ++i)
          for (std::size_t j = 0; j < fb.size(); ++j) f[i + j + 1] += fa[i] * fb[j];
        c.expected = f_vector_string(f);
        c.observed = f_vector_string(join(a.complex, b.complex).f_vector());
        decide(c);
      });
  for (const auto& a : items)
    for (const auto& b : items) {
      if (!a.connectivity_trusted || !b.connectivity_trusted) continue;
      run_case(r, "conn " + a.name + "*" + b.name, "join adds connectivities plus two", false, [&](SuiteCase& c) {
        const int ca = homological_connectivity(a.complex);
        const int cb = homological_connectivity(b.complex);
        c.expected = conn_string(ca >= kAcyclic || cb >= kAcyclic ? kAcyclic : ca + cb + 2);
        c.observed = conn_string(homological_connectivity(join(a.complex, b.complex)));
        decide(c);
      });
    }
  for (const std::string xn : {"S0", "S1"})
    for (int n = 0; n <= 3; ++n)
      run_case(r, "sk0 D" + std::to_string(n) + "*" + xn, "n+1 points joined with X is a wedge of n suspensions",
               false, [&](SuiteCase& c) {
                 const SimplicialComplex x = named_complex(xn);
                 const SimplicialComplex j = join(simplex_complex(n, 0), x);
                 const int top = j.dimension();
                 const HomologyResult hx = complex_homology(x, top);
                 c.expected = "H~";
                 for (int d = -1; d <= top; ++d) {
                   const int below = d - 1 >= -1 && d - 1 <= top ? hx.betti(d - 1) : 0;
                   c.expected += " " + std::to_string(d) + ":" + std::to_string(n * below);
                 }
                 c.observed = describe(complex_homology(j, top));
                 decide(c);
               });
  return r;
}

SuiteResult suite_figures(const Limits&) {
  SuiteResult r{"figures", {}};
  for (int p = 0; p <= 3; ++p) {
    run_case(r, "Yk k=1 p=" + std::to_string(p), "level p of Y_1 is the complete bipartite graph K(p+1,p+1)", false,
             [&](SuiteCase& c) {
               const auto y = cosimplicial_family(Family::join_power, 1, empty_complex(), p);
               c.expected = "isomorphic to K(" + std::to_string(p + 1) + "," + std::to_string(p + 1) + ")";
               c.observed = graph_isomorphic(y.level(p), complete_bipartite(p + 1, p + 1)).isomorphic
                                ? c.expected
                                : "not isomorphic, " + f_vector_string(y.level(p).f_vector());
               decide(c);
             });
    run_case(r, "Xk k=1 p=" + std::to_string(p), "level p of X_1 is the complete graph on p+1 vertices", false,
             [&](SuiteCase& c) {
               const auto x = cosimplicial_family(Family::skeleton, 1, empty_complex(), p);
               c.expected = "isomorphic to K" + std::to_string(p + 1);
               c.observed = graph_isomorphic(x.level(p), complete_graph(p + 1)).isomorphic
                                ? c.expected
                                : "not isomorphic, " + f_vector_string(x.level(p).f_vector());
               decide(c);
             });
  }
  for (const Family fam : {Family::skeleton, Family::join_power})
    for (int k = 0; k <= 2; ++k)
      run_case(r, to_string(fam) + " k=" + std::to_string(k) + " cobound 3",
               "structure maps are simplicial and satisfy the cosimplicial identities", false, [&](SuiteCase& c) {
                 c.expected = "valid";
                 cosimplicial_family(fam, k, empty_complex(), 3).validate();
                 c.observed = "valid";
                 decide(c);
               });
  return r;
}

std::string verdict_summary(const CofinalityReport& rep) {
  std::size_t cert = 0, hom = 0, bad = 0;
  for (const auto& e : rep.entries) {
    if (e.verdict == Verdict::contractible_certified) ++cert;
    else if (e.verdict == Verdict::homology_trivial_through_bound) ++hom;
    else ++bad;
  }
  return std::to_string(cert) + " certified, " + std::to_string(hom) + " acyclic, " + std::to_string(bad) +
         " obstructed";
}

SuiteResult suite_cofinality(const Limits& limits) {
  SuiteResult r{"cofinality", {}};
  for (int n = 0; n <= 3; ++n)
    run_case(r, "cn n=" + std::to_string(n), "every comma category of c_n is contractible", false, [&](SuiteCase& c) {
      const auto rep = cofinality_report(c_functor(n), CofinalityMode::comma_nerve, 3, CommaSide::over, limits);
      c.expected = "0 obstructed";
      const auto bad = std::count_if(rep.entries.begin(), rep.entries.end(),
                                     [](const CofinalityEntry& e) { return e.verdict == Verdict::obstructed; });
      c.observed = std::to_string(bad) + " obstructed";
      c.note = verdict_summary(rep);
      decide(c);
    });
  for (int n = 1; n <= 3; ++n)
    run_case(r, "delta-shaped identity n=" + std::to_string(n),
             "Hom into each object from the identity diagram is contractible", false, [&](SuiteCase& c) {
               auto cat = std::make_shared<const FiniteCategory>(truncated_simplex_category(n));
               const auto rep =
                   cofinality_report(identity_functor(cat), CofinalityMode::delta_shaped, n - 1, CommaSide::over, limits);
               c.expected = "all trivial";
               c.observed = rep.all_trivial() ? "all trivial" : verdict_summary(rep);
               decide(c);
             });
  run_case(r, "discrete(2) -> chain(3) ends", "control: a non-cofinal inclusion is detected", false,
           [&](SuiteCase& c) {
             auto src = std::make_shared<const FiniteCategory>(discrete_category(2));
             auto tgt = std::make_shared<const FiniteCategory>(chain_category(3));
             const auto rep = cofinality_report(poset_functor(src, tgt, {0, 2}), CofinalityMode::comma_nerve, 3,
                                                CommaSide::over, limits);
             c.expected = "obstructed";
             c.observed = rep.all_trivial() ? "all trivial" : "obstructed";
             c.note = verdict_summary(rep);
             decide(c);
           });
  return r;
}

SuiteResult suite_contracting(const Limits&) {
  SuiteResult r{"contracting", {}};
  for (int z = 1; z <= 3; ++z) {
    run_case(r, "cech |Z|=" + std::to_string(z) + " identities through 4",
             "the extra degeneracy satisfies every contracting-homotopy identity", false, [&](SuiteCase& c) {
               const CechPower cp = cech_power(z, 0, 4);
               std::vector<std::string> failures;
               const std::size_t checked = check_contracting_identities(cp, 4, &failures);
               c.expected = "0 failures";
               c.observed = std::to_string(failures.size()) + " failures";
               c.note = std::to_string(checked) + " identities checked";
               if (!failures.empty()) c.note += "; first: " + failures.front();
               decide(c);
             });
    run_case(r, "cech |Z|=" + std::to_string(z) + " homology through 2", "the Cech power is acyclic", false,
             [&](SuiteCase& c) {
               const CechPower cp = cech_power(z, 0, 3);
               c.expected = "H~ -1:0 0:0 1:0 2:0";
               c.observed = describe(homology(cp.nf.set, 2, true));
               decide(c);
             });
  }
  return r;
}

SuiteResult suite_adjunction(const Limits& limits) {
  SuiteResult r{"adjunction", {}};
  const std::vector<std::pair<std::string, SimplicialComplex>> spaces{
      {"D1", simplex_complex(1)}, {"D2", simplex_complex(2)}, {"bD2", simplex_boundary(2)}, {"S0", sphere0()}};
  for (int k = 0; k <= 1; ++k)
    for (const auto& [an, a] : spaces)
      for (const auto& [bn, b] : spaces)
        run_case(r, "k=" + std::to_string(k) + " A=" + an + " B=" + bn,
                 "maps from the k-skeleton match maps into the k-coskeleton", false, [&](SuiteCase& c) {
                   const SimplicialSet as = complex_to_sset(a);
                   const SimplicialSet bs = complex_to_sset(b);
                   const SimplicialSet ska = skeleton(as, k);
                   const SimplexTable bt(bs, std::max(ska.dimension(), 0));
                   const std::size_t left = enumerate_maps(ska, bt, limits, "maps from skeleton").size();
                   const SimplicialSet cb = coskeleton(bs, k, std::max(a.dimension(), 0), limits);
                   const std::size_t right = count_maps(as, cb, limits);
                   c.expected = std::to_string(left) + " maps";
                   c.observed = std::to_string(right) + " maps";
                   decide(c);
                 });
  return r;
}

std::string side_string(const HolimOutcome& o) {
  if (o.capped) return "capped";
  return describe(o.homology);
}

/// Compares two outcomes through the highest degree both reached.
void agreement(SuiteCase& c, const HolimOutcome& a, const HolimOutcome& b, int bound) {
  c.expected = side_string(a);
  c.observed = side_string(b);
  if (a.capped || b.capped) {
    c.verdict = "capped";
    c.note = a.capped ? a.note : b.note;
    return;
  }
  const int top = std::min(a.bound, b.bound);
  for (int d = -1; d <= top; ++d)
    if (!(a.homology.at(d) == b.homology.at(d))) {
      c.verdict = "fail";
      c.note = "differ in degree " + std::to_string(d);
      return;
    }
  if (top < bound) {
    c.verdict = "capped";
    c.note = "agree through degree " + std::to_string(top) + "; " + (a.bound < bound ? a.note : b.note);
  } else {
    c.verdict = "pass";
  }
}

SuiteResult suite_ez(const Limits& limits) {
  SuiteResult r{"ez", {}};
  const std::vector<std::pair<std::string, CosimplicialObject>> objects{
      {"const S1", constant_cosimplicial(cycle_graph(3), {2, 2})},
      {"cech(2) x cech(2)", external_product(cech_cosimplicial(2, 0, 2), cech_cosimplicial(2, 0, 2))}};
  for (const auto& [name, obj] : objects)
    for (int p = 0; p <= 1; ++p)
      for (int q = 0; q <= 1; ++q)
        run_case(r, name + " p=" + std::to_string(p) + " q=" + std::to_string(q),
                 "iterated truncated Tot matches Tot of the diagonal coskeleton", true, [&](SuiteCase& c) {
                   const PartialHolimReport rep = partial_holim_check(obj, p, q, 0, limits);
                   agreement(c, rep.left, rep.right, 0);
                 });
  return r;
}

struct FunctorCase {
  std::string name;
  FunctorSpec f;
};

std::vector<FunctorCase> functor_cases(bool with_join) {
  std::vector<FunctorCase> v{{"identity", FunctorSpec::identity()},
                             {"const:S1", FunctorSpec::constant("S1", cycle_graph(3))}};
  if (with_join) v.push_back({"join:point", FunctorSpec::join_with("point", point_complex())});
  return v;
}

SuiteResult suite_tnk(const Limits& limits) {
  SuiteResult r{"tnk", {}};
  struct Params {
    int n, k, depth;
  };
  const std::vector<Params> params{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  for (const auto& [n, k, depth] : params)
    for (const auto& fc : functor_cases(false))
      for (const std::string xn : {"point", "S0"})
        run_case(r,
                 "F=" + fc.name + " X=" + xn + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " N=" + std::to_string(depth),
                 "diagonal coskeleton model of the k-fold iterate matches the iterated model", true,
                 [&](SuiteCase& c) {
                   const SimplicialComplex x = named_complex(xn);
                   const HolimOutcome diag = compute_holim(T_n_k_problem(fc.f, x, n, k, depth), 1, limits);
                   const HolimOutcome iter = compute_holim(T_n_k_iterated_problem(fc.f, x, n, k, depth), 1, limits);
                   agreement(c, diag, iter, 1);
                 });
  return r;
}

SuiteResult suite_towers(const Limits& limits) {
  SuiteResult r{"towers", {}};
  for (int depth = 1; depth <= 2; ++depth)
    for (const auto& fc : functor_cases(true))
      for (const std::string xn : {"point", "S0"})
        for (int n = 0; n <= 2; ++n)
          run_case(r,
                   "F=" + fc.name + " X=" + xn + " n=" + std::to_string(n) + " N=" + std::to_string(depth),
                   "punctured-cube and cosimplicial models of T_n agree", true, [&](SuiteCase& c) {
                     const SimplicialComplex x = named_complex(xn);
                     const HolimOutcome poset = compute_holim(T_n_problem(fc.f, x, n, Model::poset, depth), 1, limits);
                     const HolimOutcome cosim =
                         compute_holim(T_n_problem(fc.f, x, n, Model::cosimplicial, depth), 1, limits);
                     agreement(c, poset, cosim, 1);
                   });
  run_case(r, "tower F=identity X=S0 k=0 n=0..2", "two-step restrictions compose on H_0", true, [&](SuiteCase& c) {
    const TowerReport t = tower_report(FunctorSpec::identity(), "S0", sphere0(), 0, 0, 2, 1, 1, limits);
    c.expected = "composition ok";
    c.observed = !t.composition_ok ? "not checked" : (*t.composition_ok ? "composition ok" : "composition broken");
    if (c.observed == "not checked") {
      c.verdict = "capped";
      return;
    }
    decide(c);
  });
  run_case(r, "tower F=const:S1 X=S0 k=0 n=0..2", "a constant functor has a constant tower", true,
           [&](SuiteCase& c) {
             const TowerReport t = tower_report(FunctorSpec::constant("S1", cycle_graph(3)), "S0", sphere0(), 0, 0, 2,
                                                1, 1, limits);
             c.expected = "stages H~ -1:0 0:0 1:1, maps ranks [1,1]";
             std::string stages, ranks;
             bool capped = false;
             for (const auto& s : t.stages) {
               capped = capped || s.capped || s.bound < 1;
               if (!s.capped) stages = stages.empty() || stages == describe(s.homology) ? describe(s.homology) : "mixed";
             }
             for (const auto& m : t.maps) {
               std::string rs = "[";
               for (std::size_t i = 0; i < m.ranks.size(); ++i) rs += (i ? "," : "") + std::to_string(m.ranks[i]);
               rs += "]";
               ranks = ranks.empty() || ranks == rs ? rs : "mixed";
             }
             c.observed = "stages " + stages + ", maps ranks " + ranks;
             c.verdict = capped ? "capped" : (c.expected == c.observed ? "pass" : "fail");
           });
  return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const Limits& limits) {
  static const std::vector<std::pair<std::string, SuiteResult (*)(const Limits&)>> table{
      {"skeleta", suite_skeleta},       {"joins", suite_joins},           {"figures", suite_figures},
      {"cofinality", suite_cofinality}, {"contracting", suite_contracting}, {"adjunction", suite_adjunction},
      {"ez", suite_ez},                 {"tnk", suite_tnk},               {"towers", suite_towers}};
  for (const auto& [n, fn] : table)
    if (n == name) return fn(limits);
  throw UnsupportedError("unknown suite '" + name + "'");
}

}  // namespace towerkit
