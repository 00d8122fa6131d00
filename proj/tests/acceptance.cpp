// One PASS/FAIL line per acceptance criterion; all comparisons exact.
// Usage: acceptance [N ...]   (default: criteria 1-9)

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "critgroup/chip_firing.hpp"
#include "critgroup/critical.hpp"
#include "critgroup/flow.hpp"
#include "critgroup/generators.hpp"
#include "critgroup/matrix_tree.hpp"
#include "critgroup/spanning_trees.hpp"
#include "support/oracles.hpp"

using namespace critgroup;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "  failed: " << what << '\n';
    }
  }
  void note(const std::string& s) { detail << "  " << s << '\n'; }
};

std::string str(const std::vector<Integer>& f) {
  std::string s = "[";
  for (std::size_t j = 0; j < f.size(); ++j) s += (j ? "," : "") + f[j].get_str();
  return s + "]";
}

std::vector<SpanningTree> torsion_free_trees(const SimplicialComplex& c, int i, std::size_t want) {
  std::vector<SpanningTree> out;
  EnumerationOptions o;
  o.on_tree = [&](const SpanningTree& t) {
    if (t.is_torsion_free()) out.push_back(t);
  };
  o.keep_going = [&](const SpanningTree&) { return out.size() < want; };
  enumerate_trees(c, i, o);
  return out;
}

void criterion1(Verdict& v) {
  const auto b = gen::bipyramid();
  const std::vector<Simplex> star{Simplex({1, 2}), Simplex({1, 3}), Simplex({1, 4}), Simplex({1, 5})};
  const auto tree = is_spanning_tree(b, 1, star);
  v.require(tree.has_value(), "{12,13,14,15} is a spanning tree");
  if (!tree) return;
  const IntegerMatrix paper{{3, -1, -1, 1, 1},
                            {-1, 2, 0, -1, 0},
                            {-1, 0, 2, 0, -1},
                            {1, -1, 0, 2, 0},
                            {1, 0, -1, 0, 2}};
  const IntegerMatrix l = reduced_laplacian(b, 1, *tree);
  v.require(l == paper, "reduced Laplacian equals the 5x5 example matrix");
  v.require(determinant(l) == 15 && oracle::cofactor_determinant(l) == 15, "det = 15");
  const auto k = critical_group_reduced(b, 1, *tree);
  v.require(k.invariant_factors == std::vector<Integer>{15} && k.is_finite(), "K_1 = Z/15");
  v.note("K_1(B) = " + k.to_string() + ", det = " + determinant(l).get_str());
}

void criterion2(Verdict& v) {
  const auto b = gen::bipyramid();
  std::vector<SpanningTree> trees;
  EnumerationOptions o;
  o.on_tree = [&](const SpanningTree& t) { trees.push_back(t); };
  const auto census = enumerate_trees(b, 2, o);
  v.require(census.count == 15 && trees.size() == 15, "exactly 15 trees");
  v.require(std::all_of(trees.begin(), trees.end(), [](const auto& t) { return t.is_torsion_free(); }),
            "all torsion-free");
  const auto& facets = b.faces(2);
  std::set<std::vector<std::size_t>> expected;
  for (std::size_t x = 0; x < facets.size(); ++x)
    for (std::size_t y = x + 1; y < facets.size(); ++y) {
      bool avoids = true;
      for (Vertex w : {4u, 5u})
        if (facets[x].contains(w) && facets[y].contains(w)) avoids = false;
      if (avoids) expected.insert({x, y});
    }
  std::set<std::vector<std::size_t>> got;
  for (const auto& t : trees) got.insert(t.complement(b));
  v.require(got == expected, "trees are B minus two facets meeting away from 4 and 5");
  const auto k1 = critical_group_direct(b, 1);
  v.require(census.tau == 15 && k1.order == census.tau, "tau_2 = 15 = |K_1|");
  v.note("trees = " + std::to_string(census.count) + ", tau_2 = " + census.tau.get_str() +
         ", |K_1| = " + k1.order.get_str());
}

void criterion3(Verdict& v) {
  std::vector<std::pair<std::string, SimplicialComplex>> fixtures{
      {"bipyramid", gen::bipyramid()}, {"boundary of 3-simplex", gen::sphere(2)},
      {"boundary of 4-simplex", gen::sphere(3)}};
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k <= 2 && k <= n - 1; ++k)
      fixtures.emplace_back(std::to_string(k) + "-skeleton on " + std::to_string(n) + " vertices",
                            gen::simplex_skeleton(n, k));
  std::mt19937_64 rng(314159);
  for (int g = 0; g < 20; ++g) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
    fixtures.emplace_back("random graph " + std::to_string(g), oracle::random_connected_graph(n, 0.35, rng));
  }
  std::size_t comparisons = 0;
  for (const auto& [name, c] : fixtures) {
    for (int i = 0; i < c.dimension(); ++i) {
      const auto direct = critical_group_direct(c, i);
      auto trees = torsion_free_trees(c, i, 4);
      if (auto greedy = find_torsion_free_tree(c, i)) trees.push_back(*greedy);
      v.require(!trees.empty(), name + ": no torsion-free tree in dimension " + std::to_string(i));
      v.require(trees.size() >= std::min<std::uint64_t>(3, enumerate_trees(c, i).count),
                name + ": fewer than 3 trees tried");
      for (const auto& t : trees) {
        ++comparisons;
        v.require(critical_group_reduced(c, i, t) == direct, name + ": routes disagree in dimension " +
                                                                 std::to_string(i));
      }
    }
  }
  v.note(std::to_string(fixtures.size()) + " fixtures, " + std::to_string(comparisons) + " tree comparisons");
}

void criterion4(Verdict& v) {
  for (int d = 1; d <= 3; ++d) {
    const auto k = critical_group_direct(gen::sphere(d), d - 1);
    v.require(k.is_cyclic() && k.order == d + 2, "K_" + std::to_string(d - 1) + " of the boundary of the " +
                                                      std::to_string(d + 1) + "-simplex is Z/" +
                                                      std::to_string(d + 2));
    v.note("d = " + std::to_string(d) + ": " + k.to_string());
  }
  for (int n = 3; n <= 8; ++n) {
    const auto k = critical_group_direct(gen::cycle(n), 0);
    v.require(k.is_cyclic() && k.order == n, "K_0(C_" + std::to_string(n) + ") = Z/" + std::to_string(n));
  }
}

void criterion5(Verdict& v) {
  for (int n = 4; n <= 6; ++n) {
    const auto k = critical_group_direct(gen::complete_graph(n), 0);
    v.require(k.invariant_factors == std::vector<Integer>(static_cast<std::size_t>(n - 2), n),
              "K_0(K_" + std::to_string(n) + ") = (Z/" + std::to_string(n) + ")^" + std::to_string(n - 2));
  }
  for (int n = 4; n <= 5; ++n) {
    Integer cayley;
    mpz_ui_pow_ui(cayley.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
    v.require(enumerate_trees(gen::complete_graph(n), 1).tau == cayley, "tau_1(K_" + std::to_string(n) + ")");
  }
  for (auto [n, k] : {std::pair{4, 1}, std::pair{5, 1}, std::pair{5, 2}}) {
    const auto r = verify_simplex_structure(n, k);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    v.note(tag + ": coker(AA^T) = " + str(r.coker_aat.torsion) + ", K_" + std::to_string(k - 1) + " + K_" +
           std::to_string(k) + " = " + str(direct_sum_factors(r.k_lower.invariant_factors, r.k_upper.invariant_factors)) +
           ", coker A + coker A = " + str(direct_sum_factors(r.coker_a.torsion, r.coker_a.torsion)));
    v.require(r.aat_matches_adjacent_sum, tag + " coker(AA^T) factors equal those of K_{k-1} + K_k");
    v.require(r.all_factors_n, tag + " each K is a sum of Z/n");
  }
}

void criterion6(Verdict& v) {
  const std::vector<std::pair<std::string, SimplicialComplex>> fixtures{
      {"bipyramid", gen::bipyramid()},
      {"boundary of 3-simplex", gen::sphere(2)},
      {"2-skeleton of the 5-simplex", gen::simplex_skeleton(6, 2)},
      {"2-skeleton on 5 vertices", gen::simplex_skeleton(5, 2)}};
  for (const auto& [name, c] : fixtures) {
    for (int i = 1; i <= 2; ++i) {
      const auto r = verify_smtt(c, i);
      v.require(r.product_formula_holds, name + ": product identity at i = " + std::to_string(i));
      v.require(r.determinant_formula_holds, name + ": determinant identity at i = " + std::to_string(i));
      v.require(!r.partial, name + ": enumeration complete");
    }
    for (int i = 0; i < c.dimension(); ++i) {
      const auto k = critical_group_direct(c, i);
      const Rational alt = alternating_order(c, i);
      v.require(k.is_finite() && alt == Rational(k.order),
                name + ": alternating product = |K_" + std::to_string(i) + "|");
      v.note(name + ": |K_" + std::to_string(i) + "| = " + k.order.get_str() + ", product = " + alt.get_str());
    }
  }
}

void criterion7(Verdict& v) {
  const auto s = gen::simplex_skeleton(6, 2);
  EnumerationOptions o;
  o.budget = 50'000'000;
  const auto census = enumerate_trees(s, 2, o);
  v.require(!census.partial, "enumeration finished within budget");
  v.require(census.tau == 46656, "tau_2 = 46656 = 6^6");
  v.require(census.torsion_histogram.count(2) == 1, "some tree has torsion order 2");
  std::string hist;
  for (const auto& [t, n] : census.torsion_histogram) hist += " " + t.get_str() + ":" + std::to_string(n);
  v.note("trees = " + std::to_string(census.count) + ", tau_2 = " + census.tau.get_str() + ", histogram" + hist);
}

IntegerVector random_vector(std::size_t n, std::mt19937_64& rng) {
  IntegerVector x(n);
  for (auto& e : x) e = std::uniform_int_distribution<long>(-4, 4)(rng);
  return x;
}

void criterion8(Verdict& v) {
  std::mt19937_64 rng(8);
  // firing invariance
  const std::vector<std::pair<SimplicialComplex, int>> flows{
      {gen::bipyramid(), 0}, {gen::bipyramid(), 1}, {gen::sphere(2), 1}, {gen::sphere(3), 2},
      {gen::simplex_skeleton(5, 2), 1}, {gen::simplex_skeleton(6, 2), 1}, {gen::cycle(6), 0}};
  for (const auto& [c, i] : flows) {
    const FlowModel m(c, i);
    const auto tree = find_torsion_free_tree(c, i);
    const CriticalCoordinates coords(m, *tree);
    const auto start = m.extend_to_conservative(*tree, random_vector(tree->complement(c).size(), rng));
    auto cur = start;
    bool same = true;
    for (int step = 0; step < 100; ++step) {
      cur = m.fire(cur, std::uniform_int_distribution<std::size_t>(0, m.size() - 1)(rng));
      same = same && m.equivalent(cur, start) && coords.to_group_element(cur) == coords.to_group_element(start);
    }
    v.require(same, "firing preserves the class (dimension " + std::to_string(i) + ")");
    // extension: conservative, zero for zero theta, linear
    const std::size_t t = tree->complement(c).size();
    const auto a = random_vector(t, rng), b = random_vector(t, rng);
    const auto ca = m.extend_to_conservative(*tree, a), cb = m.extend_to_conservative(*tree, b);
    v.require(m.is_conservative(ca) && m.is_conservative(cb), "extension is conservative");
    v.require(m.extend_to_conservative(*tree, IntegerVector(t)) == m.zero(), "zero theta extends to zero");
    v.require(m.extend_to_conservative(*tree, add(a, b)).values == add(ca.values, cb.values), "extension is linear");
  }
  // stabilization order independence
  for (int scramble = 0; scramble < 100; ++scramble) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const auto g = oracle::random_connected_graph(n, 0.5, rng);
    const ChipFiringGame game(g, 1);
    std::vector<Chips> chips(game.size());
    for (auto& x : chips) x = std::uniform_int_distribution<Chips>(0, 10)(rng);
    std::vector<std::size_t> order(game.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const auto s = game.make(chips);
    const auto x = game.stabilize(s), y = game.stabilize(s, order);
    std::vector<std::int64_t> full(chips.begin(), chips.end());
    full.insert(full.begin(), 0);
    const auto z = oracle::stabilize_randomly(oracle::graph_of(g), 0, full, rng);
    bool agree = x.state == y.state && x.firings == y.firings;
    for (std::size_t p = 0; p < game.size(); ++p)
      agree = agree && z.first[p + 1] == x.state.chips[p] && z.second[p + 1] == x.firings[p];
    v.require(agree, "stabilize is order independent");
  }
  // critical counts
  for (int n = 3; n <= 6; ++n)
    v.require(ChipFiringGame(gen::cycle(n), 1).critical_states().size() == static_cast<std::size_t>(n),
              "C_" + std::to_string(n) + " has n critical states");
  v.require(ChipFiringGame(gen::complete_graph(4), 1).critical_states().size() == 16, "K_4 has 16 critical states");
  // group law on C_5, chips up to 2 * max degree
  const ChipFiringGame game(gen::cycle(5), 1);
  const FlowModel model(game.graph(), 0);
  const CriticalCoordinates coords(model, SpanningTree{0, {0}, 1});
  std::map<ChipState, ChipState> cache;
  auto rep = [&](const ChipState& s) -> const ChipState& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, game.critical_representative(s)).first;
    return it->second;
  };
  std::map<ChipState, GroupElement> elems;
  auto elem = [&](const ChipState& s) -> const GroupElement& {
    auto it = elems.find(s);
    if (it == elems.end()) it = elems.emplace(s, coords.to_group_element(game.to_configuration(s))).first;
    return it->second;
  };
  std::vector<ChipState> states;
  ChipState cur{std::vector<Chips>(game.size(), 0)};
  const Chips bound = 4;
  while (true) {
    states.push_back(cur);
    std::size_t p = game.size();
    while (p > 0 && cur.chips[p - 1] == bound) cur.chips[--p] = 0;
    if (p == 0) break;
    ++cur.chips[p - 1];
  }
  bool law = true;
  for (const auto& a : states)
    for (const auto& b : states) {
      ChipState sum = a;
      for (std::size_t p = 0; p < game.size(); ++p) sum.chips[p] += b.chips[p];
      law = law && elem(rep(a)) + elem(rep(b)) == elem(rep(sum)) && elem(rep(a)) == elem(a);
    }
  v.require(law, "[c] + [c'] = [c + c'] on C_5");
  v.note("group law checked on " + std::to_string(states.size() * states.size()) + " pairs");
}

void criterion9(Verdict& v) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 500; ++trial) {
    const IntegerMatrix a = oracle::random_matrix(dim(rng), dim(rng), -9, 9, rng);
    const SmithForm s = smith_normal_form(a);
    bool chain = true;
    for (std::size_t j = 1; j < s.factors.size(); ++j) chain = chain && s.factors[j] % s.factors[j - 1] == 0;
    v.require(s.left * a * s.right == s.diagonal(a.rows(), a.cols()) && chain &&
                  abs(oracle::cofactor_determinant(s.left)) == 1 && abs(oracle::cofactor_determinant(s.right)) == 1,
              "SNF reconstruction, trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const IntegerMatrix m = oracle::random_matrix(dim(rng), dim(rng), -9, 9, rng);
    v.require(pseudo_determinant(m * m.transpose()) == pseudo_determinant(m.transpose() * m),
              "pdet(MM^T) = pdet(M^T M), trial " + std::to_string(trial));
  }
}

const std::map<int, std::pair<std::string, std::function<void(Verdict&)>>>& criteria() {
  static const std::map<int, std::pair<std::string, std::function<void(Verdict&)>>> table{
      {1, {"bipyramid reduced Laplacian, det 15, K_1 = Z/15", criterion1}},
      {2, {"bipyramid 2-tree census", criterion2}},
      {3, {"reduced route equals direct route", criterion3}},
      {4, {"spheres and cycles", criterion4}},
      {5, {"simplex skeleta", criterion5}},
      {6, {"matrix-tree identities and alternating product", criterion6}},
      {7, {"6-vertex 2-skeleton census (extended)", criterion7}},
      {8, {"flow and chip-firing properties", criterion8}},
      {9, {"linear-algebra kernel", criterion9}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int j = 1; j < argc; ++j) which.push_back(std::atoi(argv[j]));
  if (which.empty())
    for (const auto& [n, _] : criteria()) which.push_back(n);
  int failures = 0;
  for (int n : which) {
    auto it = criteria().find(n);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << n << '\n';
      return 2;
    }
    Verdict v;
    it->second.second(v);
    std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << "  " << it->second.first << '\n'
              << v.detail.str();
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
