#include "critgroup/cli.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "critgroup/errors.hpp"

namespace critgroup::cli {

namespace {

using Handler = std::function<int(const Options&, const LoadedComplex&, Report&)>;

struct Command {
  CLI::App* app;
  std::string name;
  Handler handler;                                    // needs a complex
  std::function<int(const Options&, Report&)> bare;   // does not
};

std::string echo(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t j = 0; j < args.size(); ++j) s += (j ? " " : "") + args[j];
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Critical groups, spanning trees and chip-firing on simplicial complexes", "critgroup"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print a JSON report");
  app.add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--gen", o.gen, "Use a generated complex, e.g. \"cycle 5\" or \"simplex-skeleton 6 2\"");

  std::vector<Command> commands;
  auto with_source = [&](CLI::App* sub) {
    sub->add_option("complex", o.source, "Facet file, or - for stdin");
  };
  auto add_dim = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--dim,-i", o.dim, "Dimension i");
    if (required) opt->required();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Maximum subset extensions")->capture_default_str();
    sub->add_option("--workers", o.workers, "Worker threads")->capture_default_str();
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    with_source(sub);
    commands.push_back({sub, name, std::move(h), nullptr});
    return sub;
  };

  CLI::App* gen = app.add_subcommand("gen", "Print a generated complex as a facet file");
  gen->add_option("kind", o.gen_words, "bipyramid | cycle N | complete N | simplex-skeleton N K | sphere D | rp2")
      ->required();
  commands.push_back({gen, "gen", nullptr, cmd_gen});

  leaf(&app, "info", "f-vector, homology, purity and APC", cmd_info);

  auto* cg = leaf(&app, "critical-group", "Compute K_i", cmd_critical_group);
  add_dim(cg);
  cg->add_option("--tree", o.tree, "auto, or a file of tree faces; omit for the direct route");

  auto* trees = leaf(&app, "trees", "Enumerate spanning trees", cmd_trees);
  add_dim(trees);
  add_budget(trees);
  auto* census = trees->add_flag("--census", o.census, "Summary only (default)");
  trees->add_flag("--stream", o.stream, "List every tree")->excludes(census);

  CLI::App* verify = app.add_subcommand("verify", "Check identities");
  verify->require_subcommand(1);
  auto* smtt = leaf(verify, "smtt", "Both matrix-tree identities in dimension i", cmd_verify_smtt);
  add_dim(smtt);
  add_budget(smtt);
  auto* main_thm = leaf(verify, "main-thm", "Reduced route against direct route", cmd_verify_main_thm);
  add_dim(main_thm);
  add_budget(main_thm);
  main_thm->add_option("--trees", o.tree_count, "Torsion-free trees to try")->capture_default_str();
  leaf(verify, "sphere", "K_{d-1} of a homology sphere is cyclic of order f_d", cmd_verify_sphere);
  CLI::App* simplex = verify->add_subcommand("simplex", "Critical groups of simplex skeleta");
  simplex->add_option("--n", o.n, "Vertices")->required();
  simplex->add_option("--k", o.k, "Dimension")->required();
  commands.push_back({simplex, "simplex", nullptr, cmd_verify_simplex});
  auto* alt = leaf(verify, "alt-product", "Alternating product of pi_j against |K_i|", cmd_verify_alt_product);
  add_dim(alt);

  CLI::App* flow = app.add_subcommand("flow", "Discrete i-flows");
  flow->require_subcommand(1);
  auto* fire = leaf(flow, "fire", "Fire a face", cmd_flow_fire);
  add_dim(fire);
  fire->add_option("--config", o.config, "Values on the i-faces, in face order (default zero)");
  fire->add_option("--face", o.face, "Face to fire, e.g. 23 or \"2 13\"")->required();
  fire->add_option("--times", o.times, "Repeat count")->capture_default_str();
  auto* extend = leaf(flow, "extend", "Conservative extension of values off a tree", cmd_flow_extend);
  add_dim(extend);
  extend->add_option("--tree", o.tree, "auto or a file of tree faces")->capture_default_str();
  extend->add_option("--theta", o.theta, "Values on the non-tree faces (default zero)");
  auto* equiv = leaf(flow, "equiv", "Equivalence modulo the Laplacian", cmd_flow_equiv);
  add_dim(equiv);
  equiv->add_option("--config", o.config, "First configuration")->required();
  equiv->add_option("--other", o.other, "Second configuration")->required();
  auto* canonical = leaf(flow, "canonical", "Group-element coordinates of a configuration", cmd_flow_canonical);
  add_dim(canonical);
  canonical->add_option("--config", o.config, "Full configuration or its non-tree restriction")->required();
  canonical->add_option("--tree", o.tree, "auto or a file of tree faces");

  CLI::App* chip = app.add_subcommand("chip", "Chip-firing on the 1-skeleton");
  chip->require_subcommand(1);
  auto chip_leaf = [&](const std::string& name, const std::string& help, Handler h, bool chips) {
    auto* sub = leaf(chip, name, help, std::move(h));
    sub->add_option("--bank", o.bank, "Bank vertex (default: smallest label)");
    if (chips) sub->add_option("--chips", o.chips, "Chips on the non-bank vertices in label order")->required();
    return sub;
  };
  chip_leaf("stabilize", "Fire ready vertices until stable", cmd_chip_stabilize, true);
  chip_leaf("recurrent", "Burning test", cmd_chip_recurrent, true);
  chip_leaf("representative", "Critical state equivalent to the input", cmd_chip_representative, true);
  auto* law = chip_leaf("group-law", "Check [c] + [c'] = [c + c']", cmd_chip_group_law, false);
  law->add_option("--bound", o.bound, "Largest chip count per vertex (default 2 * max degree)");
  law->add_option("--samples", o.samples, "Random pairs")->capture_default_str();
  law->add_flag("--exhaustive", o.exhaustive, "Every pair of states up to the bound");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto chosen = std::find_if(commands.begin(), commands.end(), [](const Command& c) { return c.app->parsed(); });
  Report report(echo(args));
  int code = kOk;
  try {
    if (chosen == commands.end()) throw InputError("no command given");
    if (chosen->bare) {
      code = chosen->bare(o, report);
    } else {
      const LoadedComplex lc = load_source(o.source, o.gen, in);
      report.set_input(lc.source, lc.complex);
      code = chosen->handler(o, lc, report);
    }
  } catch (const HypothesisError& e) {
    report.fail("hypothesis", e.what());
    code = kHypothesisViolation;
  } catch (const InputError& e) {
    report.fail("input", e.what());
    code = kInputError;
  } catch (const DimensionError& e) {
    report.fail("input", e.what());
    code = kInputError;
  }
  report.emit(out, err, o.json);
  return code;
}

}  // namespace critgroup::cli
