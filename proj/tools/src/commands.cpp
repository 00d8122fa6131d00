#include "commands.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "critgroup/chip_firing.hpp"
#include "critgroup/cli.hpp"
#include "critgroup/critical.hpp"
#include "critgroup/errors.hpp"
#include "critgroup/facet_io.hpp"
#include "critgroup/flow.hpp"
#include "critgroup/matrix_tree.hpp"
#include "critgroup/spanning_trees.hpp"

namespace critgroup::cli {

namespace {

Json group_json(const CriticalGroup& g) {
  return Json{{"dimension", std::to_string(g.dimension)},
              {"invariant_factors", dec(g.invariant_factors)},
              {"free_rank", std::to_string(g.free_rank)},
              {"order", dec(g.order)},
              {"finite", g.is_finite()},
              {"group", g.to_string()}};
}

Json cokernel_json(const CokernelStructure& c) {
  return Json{{"invariant_factors", dec(c.torsion)},
              {"free_rank", std::to_string(c.free_rank)},
              {"group", c.to_string()}};
}

void print_group(std::ostream& os, const CriticalGroup& g) {
  os << "K_" << g.dimension << " = " << g.to_string() << '\n';
  os << "invariant factors: " << (g.invariant_factors.empty() ? "(none)" : join(g.invariant_factors)) << '\n';
  os << "free rank: " << g.free_rank << '\n';
  os << "order: " << (g.is_finite() ? g.order.get_str() : "infinite") << '\n';
}

Json tree_json(const SimplicialComplex& c, const SpanningTree& t) {
  return Json{{"dimension", std::to_string(t.dimension)},
              {"faces", face_list(t.face_list(c))},
              {"torsion_order", dec(t.torsion_order)}};
}

std::string faces_text(const std::vector<Simplex>& faces) {
  std::string s;
  for (std::size_t j = 0; j < faces.size(); ++j) s += (j ? " " : "") + faces[j].to_string();
  return s;
}

std::vector<Simplex> pick(const std::vector<Simplex>& faces, const std::vector<std::size_t>& idx) {
  std::vector<Simplex> out;
  for (auto j : idx) out.push_back(faces[j]);
  return out;
}

std::string chips_text(const std::vector<Chips>& xs) {
  std::string s;
  for (std::size_t j = 0; j < xs.size(); ++j) s += (j ? " " : "") + std::to_string(xs[j]);
  return s;
}

template <class T>
Json chips_json(const std::vector<T>& xs) {
  Json a = Json::array();
  for (auto x : xs) a.push_back(std::to_string(x));
  return a;
}

EnumerationOptions enum_options(const Options& o) {
  EnumerationOptions e;
  e.budget = o.budget;
  e.workers = std::max(1u, o.workers);
  return e;
}

int verdict(Report& r, bool pass) {
  r.result()["verdict"] = pass ? "PASS" : "FAIL";
  r.text() << "verdict: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kOk : kVerificationFailed;
}

Vertex bank_of(const Options& o, const SimplicialComplex& c) {
  if (!o.bank) return c.vertices().front();
  if (*o.bank <= 0) throw InputError("bank must be a positive vertex label");
  return static_cast<Vertex>(*o.bank);
}

}  // namespace

int cmd_gen(const Options& o, Report& r) {
  const SimplicialComplex c = generate(o.gen_words);
  std::string name = "gen:";
  for (std::size_t j = 0; j < o.gen_words.size(); ++j) name += (j ? " " : "") + o.gen_words[j];
  r.set_input(name, c);
  r.result()["facets"] = face_list(c.facets());
  r.result()["f_vector"] = dec_list(c.f_vector());
  r.text() << format_facets(c);
  return kOk;
}

int cmd_info(const Options&, const LoadedComplex& lc, Report& r) {
  const SimplicialComplex& c = lc.complex;
  const int d = c.dimension();
  auto& res = r.result();
  res["dimension"] = std::to_string(d);
  res["f_vector"] = dec_list(c.f_vector());
  res["vertices"] = std::to_string(c.face_count(0));
  res["facets"] = std::to_string(c.facets().size());
  res["pure"] = c.is_pure();
  res["apc"] = c.is_apc();
  Json homology = Json::array();
  Json apc_skeleta = Json::array();
  auto& t = r.text();
  t << "dimension: " << d << '\n';
  t << "f-vector:";
  for (auto f : c.f_vector()) t << ' ' << f;
  t << '\n' << "facets: " << c.facets().size() << '\n';
  t << "pure: " << yes_no(c.is_pure()) << '\n' << "apc: " << yes_no(c.is_apc()) << '\n';
  for (int i = -1; i <= d; ++i) {
    const HomologyGroup h = c.reduced_homology(i);
    homology.push_back(Json{{"dimension", std::to_string(i)},
                            {"betti", std::to_string(h.free_rank)},
                            {"torsion", dec(h.torsion)},
                            {"group", h.to_string()}});
    t << "H~_" << i << " = " << h.to_string() << '\n';
  }
  for (int i = 0; i <= d; ++i) {
    const bool apc = c.skeleton(i).is_apc();
    apc_skeleta.push_back(apc);
    t << i << "-skeleton apc: " << yes_no(apc) << '\n';
  }
  res["homology"] = homology;
  res["apc_skeleta"] = apc_skeleta;
  return kOk;
}

int cmd_critical_group(const Options& o, const LoadedComplex& lc, Report& r) {
  const SimplicialComplex& c = lc.complex;
  CriticalGroup g;
  auto& res = r.result();
  if (o.tree.empty()) {
    g = critical_group_direct(c, o.dim);
    res["route"] = "direct";
    r.text() << "route: direct\n";
  } else {
    const SpanningTree tree = resolve_tree(c, o.dim, o.tree);
    g = critical_group_reduced(c, o.dim, tree);
    res["route"] = "reduced";
    res["tree"] = tree_json(c, tree);
    r.text() << "route: reduced\n" << "tree: " << faces_text(tree.face_list(c)) << '\n';
  }
  res["group"] = group_json(g);
  print_group(r.text(), g);
  return kOk;
}

int cmd_trees(const Options& o, const LoadedComplex& lc, Report& r) {
  const SimplicialComplex& c = lc.complex;
  EnumerationOptions e = enum_options(o);
  Json streamed = Json::array();
  if (o.stream) {
    e.on_tree = [&](const SpanningTree& t) {
      if (o.json) {
        streamed.push_back(tree_json(c, t));
      } else {
        r.text() << "tree: " << faces_text(t.face_list(c)) << "  torsion " << t.torsion_order << '\n';
      }
    };
  }
  const TreeCensus census = enumerate_trees(c, o.dim, e);
  r.warn_all(census.warnings);
  auto& res = r.result();
  res["dimension"] = std::to_string(o.dim);
  res["tree_size"] = std::to_string(tree_size(c, o.dim));
  res["count"] = std::to_string(census.count);
  res["tau"] = dec(census.tau);
  Json hist = Json::object();
  for (const auto& [t, n] : census.torsion_histogram) hist[t.get_str()] = std::to_string(n);
  res["torsion_histogram"] = hist;
  res["extensions"] = std::to_string(census.extensions);
  res["partial"] = census.partial;
  if (o.stream) res["trees"] = streamed;
  auto& t = r.text();
  t << "dimension: " << o.dim << '\n' << "trees: " << census.count << '\n' << "tau: " << census.tau << '\n';
  for (const auto& [tor, n] : census.torsion_histogram) t << "torsion " << tor << ": " << n << '\n';
  t << "extensions: " << census.extensions << '\n';
  if (census.partial) {
    t << "partial: yes (budget exhausted, counts are lower bounds)\n";
    return kBudgetExceeded;
  }
  return kOk;
}

int cmd_verify_smtt(const Options& o, const LoadedComplex& lc, Report& r) {
  const SimplicialComplex& c = lc.complex;
  const SmttReport s = verify_smtt(c, o.dim, enum_options(o));
  r.warn_all(s.warnings);
  auto& res = r.result();
  res["dimension"] = std::to_string(s.dimension);
  res["pi"] = dec(s.pi);
  res["tau"] = dec(s.tau);
  res["tau_lower"] = dec(s.tau_lower);
  res["homology_order"] = dec(s.homology_order);
  res["lower_tree"] = tree_json(c, s.lower_tree);
  res["reduced_determinant"] = dec(s.reduced_determinant);
  res["product_formula"] = s.product_formula_holds;
  res["determinant_formula"] = s.determinant_formula_holds;
  res["partial"] = s.partial;
  const Integer h2 = s.homology_order * s.homology_order;
  const Integer t2 = s.lower_tree.torsion_order * s.lower_tree.torsion_order;
  auto& t = r.text();
  t << "dimension: " << s.dimension << '\n';
  t << "pi_" << s.dimension << " * |H_" << s.dimension - 2 << "|^2 = " << s.pi << " * " << h2 << " = "
    << s.pi * h2 << '\n';
  t << "tau_" << s.dimension << " * tau_" << s.dimension - 1 << " = " << s.tau << " * " << s.tau_lower
    << " = " << s.tau * s.tau_lower << "  [" << (s.product_formula_holds ? "holds" : "fails") << "]\n";
  t << "tau_" << s.dimension << " * |H(T)|^2 = " << s.tau << " * " << t2 << " = " << s.tau * t2 << '\n';
  t << "|H|^2 * det(L~) = " << h2 << " * " << s.reduced_determinant << " = " << h2 * s.reduced_determinant
    << "  [" << (s.determinant_formula_holds ? "holds" : "fails") << "]\n";
  t << "tree T: " << faces_text(s.lower_tree.face_list(c)) << '\n';
  if (s.partial) {
    res["verdict"] = "INCOMPLETE";
    t << "verdict: INCOMPLETE (budget exhausted)\n";
    return kBudgetExceeded;
  }
  return verdict(r, s.passed());
}

int cmd_verify_main_thm(const Options& o, const LoadedComplex& lc, Report& r) {
  const SimplicialComplex& c = lc.complex;
  const CriticalGroup direct = critical_group_direct(c, o.dim);
  const std::size_t pool_size = std::max<std::size_t>(64, 8 * o.tree_count);
  std::vector<SpanningTree> pool;
  EnumerationOptions e = enum_options(o);
  e.workers = 1;
  e.on_tree = [&](const SpanningTree& t) {
    if (t.is_torsion_free()) pool.push_back(t);
  };
  e.keep_going = [&](const SpanningTree&) { return pool.size() < pool_size; };
  const TreeCensus census = enumerate_trees(c, o.dim, e);
  r.warn_all(census.warnings);
  if (pool.empty()) throw TreeHasTorsion("no torsion-free spanning tree to compare against");
  std::mt19937_64 rng(o.seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(pool.size(), std::max<std::size_t>(1, o.tree_count)));

  auto& res = r.result();
  res["dimension"] = std::to_string(o.dim);
  res["seed"] = std::to_string(o.seed);
  res["direct"] = group_json(direct);
  Json trees = Json::array();
  bool all = true;
  r.text() << "direct: K_" << o.dim << " = " << direct.to_string() << '\n';
  for (const auto& tree : pool) {
    const CriticalGroup g = critical_group_reduced(c, o.dim, tree);
    const bool match = g == direct;
    all = all && match;
    trees.push_back(Json{{"tree", tree_json(c, tree)}, {"group", group_json(g)}, {"match", match}});
    r.text() << "tree " << faces_text(tree.face_list(c)) << ": " << g.to_string() << (match ? "" : "  MISMATCH")
             << '\n';
  }
  res["trees"] = trees;
  return verdict(r, all);
}

int cmd_verify_sphere(const Options&, const LoadedComplex& lc, Report& r) {
  const SimplicialComplex& c = lc.complex;
  const int d = c.dimension();
  if (d < 1) throw HypothesisError("sphere check needs dimension at least 1");
  bool sphere = c.is_pure();
  for (int i = -1; i < d && sphere; ++i) sphere = c.reduced_homology(i).is_trivial();
  const HomologyGroup top = c.reduced_homology(d);
  sphere = sphere && top.free_rank == 1 && top.torsion.empty();
  if (!sphere) throw HypothesisError("complex is not a homology sphere");
  const CriticalGroup g = critical_group_direct(c, d - 1);
  const std::size_t facets = c.face_count(d);
  auto& res = r.result();
  res["dimension"] = std::to_string(d);
  res["facets"] = std::to_string(facets);
  res["group"] = group_json(g);
  res["cyclic"] = g.is_cyclic();
  r.text() << "K_" << d - 1 << " = " << g.to_string() << '\n' << "facets: " << facets << '\n'
           << "cyclic: " << yes_no(g.is_cyclic()) << '\n';
  return verdict(r, g.is_cyclic() && g.order == Integer(static_cast<unsigned long>(facets)));
}

int cmd_verify_simplex(const Options& o, Report& r) {
  if (o.n < 3 || o.k < 1 || o.k > o.n - 2) throw InputError("need n >= 3 and 1 <= k <= n - 2");
  const SimplexStructureReport s = verify_simplex_structure(o.n, o.k);
  auto& res = r.result();
  res["n"] = std::to_string(s.n);
  res["k"] = std::to_string(s.k);
  res["coker_a"] = cokernel_json(s.coker_a);
  res["coker_aat"] = cokernel_json(s.coker_aat);
  res["k_lower"] = group_json(s.k_lower);
  res["k_upper"] = group_json(s.k_upper);
  res["aat_block_diagonal"] = s.aat_block_diagonal;
  res["aat_matches_adjacent_sum"] = s.aat_matches_adjacent_sum;
  res["aat_matches_doubled_coker"] = s.aat_matches_doubled_coker;
  res["coker_a_matches_lower"] = s.coker_a_matches_lower;
  res["coker_a_matches_upper"] = s.coker_a_matches_upper;
  res["all_factors_n"] = s.all_factors_n;
  res["binom_n2_k"] = std::to_string(s.binom_n2_k);
  res["lower_copies"] = std::to_string(s.lower_copies);
  res["upper_copies"] = std::to_string(s.upper_copies);
  auto& t = r.text();
  t << "coker A = " << s.coker_a.to_string() << '\n';
  t << "coker AA^T = " << s.coker_aat.to_string() << '\n';
  t << "K_" << s.k - 1 << " = " << s.k_lower.to_string() << '\n';
  t << "K_" << s.k << " = " << s.k_upper.to_string() << '\n';
  t << "AA^T block diagonal: " << yes_no(s.aat_block_diagonal) << '\n';
  t << "coker AA^T = K_" << s.k - 1 << " + K_" << s.k << ": " << yes_no(s.aat_matches_adjacent_sum) << '\n';
  t << "coker AA^T = coker A + coker A: " << yes_no(s.aat_matches_doubled_coker) << '\n';
  t << "coker A = K_" << s.k - 1 << ": " << yes_no(s.coker_a_matches_lower) << '\n';
  t << "all factors n: " << yes_no(s.all_factors_n) << '\n';
  t << "binom(n-2,k) = " << s.binom_n2_k << ", copies in K_" << s.k - 1 << ": " << s.lower_copies
    << ", in K_" << s.k << ": " << s.upper_copies << '\n';
  return verdict(r, s.passed());
}

int cmd_verify_alt_product(const Options& o, const LoadedComplex& lc, Report& r) {
  const SimplicialComplex& c = lc.complex;
  const Rational alt = alternating_order(c, o.dim);
  const CriticalGroup g = critical_group_direct(c, o.dim);
  auto& res = r.result();
  res["dimension"] = std::to_string(o.dim);
  res["alternating_product"] = alt.get_str();
  Json pis = Json::array();
  for (int j = 0; j <= o.dim + 1; ++j) pis.push_back(dec(pi_product(c, j)));
  res["pi"] = pis;
  res["group"] = group_json(g);
  r.text() << "alternating product: " << alt.get_str() << '\n' << "K_" << o.dim << " = " << g.to_string() << '\n';
  if (!g.is_finite()) r.warn("K_" + std::to_string(o.dim) + " is infinite");
  return verdict(r, g.is_finite() && alt == Rational(g.order));
}

int cmd_flow_fire(const Options& o, const LoadedComplex& lc, Report& r) {
  const FlowModel m(lc.complex, o.dim);
  const Configuration before = o.config.empty() ? m.zero() : m.make(parse_integers(o.config));
  const Simplex face = parse_face(o.face);
  Configuration after = before;
  for (unsigned j = 0; j < o.times; ++j) after = m.fire(after, face);
  auto& res = r.result();
  res["dimension"] = std::to_string(o.dim);
  res["faces"] = face_list(lc.complex.faces(o.dim));
  res["fired"] = face.to_string();
  res["times"] = std::to_string(o.times);
  res["before"] = dec(before.values);
  res["after"] = dec(after.values);
  res["conservative_before"] = m.is_conservative(before);
  res["conservative_after"] = m.is_conservative(after);
  auto& t = r.text();
  t << "faces: " << faces_text(lc.complex.faces(o.dim)) << '\n';
  t << "before: " << join(before.values) << '\n' << "after:  " << join(after.values) << '\n';
  t << "conservative: " << yes_no(m.is_conservative(after)) << '\n';
  return kOk;
}

int cmd_flow_extend(const Options& o, const LoadedComplex& lc, Report& r) {
  const SimplicialComplex& c = lc.complex;
  const FlowModel m(c, o.dim);
  const SpanningTree tree = resolve_tree(c, o.dim, o.tree.empty() ? "auto" : o.tree);
  const auto theta_idx = tree.complement(c);
  std::vector<Integer> theta = o.theta.empty() ? std::vector<Integer>(theta_idx.size()) : parse_integers(o.theta);
  const Configuration out = m.extend_to_conservative(tree, theta);
  auto& res = r.result();
  res["dimension"] = std::to_string(o.dim);
  res["tree"] = tree_json(c, tree);
  res["theta_faces"] = face_list(pick(c.faces(o.dim), theta_idx));
  res["faces"] = face_list(c.faces(o.dim));
  res["configuration"] = dec(out.values);
  res["conservative"] = m.is_conservative(out);
  auto& t = r.text();
  t << "tree: " << faces_text(tree.face_list(c)) << '\n';
  t << "faces: " << faces_text(c.faces(o.dim)) << '\n' << "configuration: " << join(out.values) << '\n';
  t << "conservative: " << yes_no(m.is_conservative(out)) << '\n';
  return kOk;
}

int cmd_flow_equiv(const Options& o, const LoadedComplex& lc, Report& r) {
  const FlowModel m(lc.complex, o.dim);
  const Configuration a = m.make(parse_integers(o.config));
  const Configuration b = m.make(parse_integers(o.other));
  const auto witness = m.firing_witness(a, b);
  auto& res = r.result();
  res["dimension"] = std::to_string(o.dim);
  res["equivalent"] = witness.has_value();
  res["witness"] = witness ? dec(*witness) : Json(nullptr);
  r.text() << "equivalent: " << yes_no(witness.has_value()) << '\n';
  if (witness) r.text() << "firing vector: " << join(*witness) << '\n';
  return kOk;
}

int cmd_flow_canonical(const Options& o, const LoadedComplex& lc, Report& r) {
  const SimplicialComplex& c = lc.complex;
  const FlowModel m(c, o.dim);
  const SpanningTree tree = resolve_tree(c, o.dim, o.tree.empty() ? "auto" : o.tree);
  const CriticalCoordinates coords(m, tree);
  const auto values = parse_integers(o.config);
  const GroupElement g = coords.to_group_element(values);
  if (values.size() == m.size() && !m.is_conservative(m.make(values)))
    r.warn("configuration is not conservative; coordinates describe its Theta restriction");
  auto& res = r.result();
  res["dimension"] = std::to_string(o.dim);
  res["tree"] = tree_json(c, tree);
  res["theta_faces"] = face_list(pick(c.faces(o.dim), coords.theta()));
  res["residues"] = dec(g.residues());
  res["moduli"] = dec(g.moduli());
  res["identity"] = g.is_identity();
  auto& t = r.text();
  t << "tree: " << faces_text(tree.face_list(c)) << '\n';
  t << "residues: " << join(g.residues()) << '\n' << "moduli:   " << join(g.moduli()) << '\n';
  t << "identity: " << yes_no(g.is_identity()) << '\n';
  return kOk;
}

int cmd_chip_stabilize(const Options& o, const LoadedComplex& lc, Report& r) {
  const ChipFiringGame game(lc.complex, bank_of(o, lc.complex));
  const Stabilization s = game.stabilize(game.make(parse_chips(o.chips)));
  auto& res = r.result();
  res["bank"] = std::to_string(game.bank());
  res["players"] = chips_json(game.players());
  res["state"] = chips_json(s.state.chips);
  res["firings"] = chips_json(s.firings);
  std::vector<Chips> firings(s.firings.begin(), s.firings.end());
  r.text() << "state: " << chips_text(s.state.chips) << '\n' << "firings: " << chips_text(firings) << '\n';
  return kOk;
}

int cmd_chip_recurrent(const Options& o, const LoadedComplex& lc, Report& r) {
  const ChipFiringGame game(lc.complex, bank_of(o, lc.complex));
  const ChipState s = game.make(parse_chips(o.chips));
  const bool stable = game.is_stable(s);
  const bool recurrent = game.is_recurrent(s);
  auto& res = r.result();
  res["bank"] = std::to_string(game.bank());
  res["stable"] = stable;
  res["recurrent"] = recurrent;
  res["critical"] = stable && recurrent;
  r.text() << "stable: " << yes_no(stable) << '\n' << "recurrent: " << yes_no(recurrent) << '\n'
           << "critical: " << yes_no(stable && recurrent) << '\n';
  return kOk;
}

int cmd_chip_representative(const Options& o, const LoadedComplex& lc, Report& r) {
  const ChipFiringGame game(lc.complex, bank_of(o, lc.complex));
  const ChipState rep = game.critical_representative(game.make(parse_chips(o.chips)));
  auto& res = r.result();
  res["bank"] = std::to_string(game.bank());
  res["players"] = chips_json(game.players());
  res["representative"] = chips_json(rep.chips);
  r.text() << "critical representative: " << chips_text(rep.chips) << '\n';
  return kOk;
}

int cmd_chip_group_law(const Options& o, const LoadedComplex& lc, Report& r) {
  const ChipFiringGame game(lc.complex, bank_of(o, lc.complex));
  const std::size_t n = game.size();
  std::uint64_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) max_deg = std::max(max_deg, game.degree(v));
  const std::uint64_t bound = o.bound ? o.bound : 2 * max_deg;

  const FlowModel model(game.graph(), 0);
  const auto bank_idx = game.graph().index_of(Simplex({game.bank()}));
  const CriticalCoordinates coords(model, SpanningTree{0, {*bank_idx}, 1});

  std::map<ChipState, ChipState> reps;
  auto rep = [&](const ChipState& s) -> const ChipState& {
    auto it = reps.find(s);
    if (it == reps.end()) it = reps.emplace(s, game.critical_representative(s)).first;
    return it->second;
  };
  auto element = [&](const ChipState& s) { return coords.to_group_element(game.to_configuration(s)); };

  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  Json counterexample = nullptr;
  auto check = [&](const ChipState& a, const ChipState& b) {
    ChipState sum = a;
    for (std::size_t v = 0; v < n; ++v) sum.chips[v] += b.chips[v];
    const ChipState& ra = rep(a);
    const ChipState& rb = rep(b);
    const ChipState& rs = rep(sum);
    bool ok = element(ra) + element(rb) == element(rs) && element(ra) == element(a) &&
              game.is_critical(rs);
    ++checked;
    if (!ok && failures++ == 0)
      counterexample = Json{{"c", chips_json(a.chips)}, {"c_prime", chips_json(b.chips)}};
  };

  std::vector<ChipState> states;
  if (o.exhaustive) {
    long double total = 1;
    for (std::size_t v = 0; v < n; ++v) total *= static_cast<long double>(bound + 1);
    if (total * total > 1e8L) throw InputError("too many pairs for --exhaustive; lower --bound");
    ChipState cur{std::vector<Chips>(n, 0)};
    while (true) {
      states.push_back(cur);
      std::size_t v = n;
      while (v > 0 && static_cast<std::uint64_t>(cur.chips[v - 1]) == bound) cur.chips[--v] = 0;
      if (v == 0) break;
      ++cur.chips[v - 1];
    }
    for (const auto& a : states)
      for (const auto& b : states) check(a, b);
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, bound);
    auto draw = [&] {
      ChipState s{std::vector<Chips>(n)};
      for (auto& x : s.chips) x = static_cast<Chips>(dist(rng));
      return s;
    };
    for (std::uint64_t j = 0; j < o.samples; ++j) {
      const ChipState a = draw();
      const ChipState b = draw();
      check(a, b);
    }
  }

  auto& res = r.result();
  res["bank"] = std::to_string(game.bank());
  res["bound"] = std::to_string(bound);
  res["mode"] = o.exhaustive ? "exhaustive" : "sampled";
  if (!o.exhaustive) res["seed"] = std::to_string(o.seed);
  res["pairs_checked"] = std::to_string(checked);
  res["failures"] = std::to_string(failures);
  res["counterexample"] = counterexample;
  res["moduli"] = dec(coords.moduli());
  r.text() << "pairs checked: " << checked << " (" << (o.exhaustive ? "exhaustive" : "sampled") << ", bound "
           << bound << ")\n"
           << "failures: " << failures << '\n';
  return verdict(r, failures == 0);
}

}  // namespace critgroup::cli
