#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inputs.hpp"
#include "report.hpp"

namespace critgroup::cli {

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::string source;
  std::string gen;
  std::vector<std::string> gen_words;

  int dim = 0;
  std::string tree;
  bool census = false;
  bool stream = false;
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;
  int n = 0;
  int k = 0;
  std::size_t tree_count = 3;

  std::string config;
  std::string other;
  std::string face;
  std::string theta;
  unsigned times = 1;

  std::optional<std::int64_t> bank;
  std::string chips;
  std::uint64_t bound = 0;
  std::uint64_t samples = 200;
  bool exhaustive = false;
};

// Each returns an exit code after filling the report.
int cmd_gen(const Options& o, Report& r);
int cmd_info(const Options& o, const LoadedComplex& c, Report& r);
int cmd_critical_group(const Options& o, const LoadedComplex& c, Report& r);
int cmd_trees(const Options& o, const LoadedComplex& c, Report& r);
int cmd_verify_smtt(const Options& o, const LoadedComplex& c, Report& r);
int cmd_verify_main_thm(const Options& o, const LoadedComplex& c, Report& r);
int cmd_verify_sphere(const Options& o, const LoadedComplex& c, Report& r);
int cmd_verify_simplex(const Options& o, Report& r);
int cmd_verify_alt_product(const Options& o, const LoadedComplex& c, Report& r);
int cmd_flow_fire(const Options& o, const LoadedComplex& c, Report& r);
int cmd_flow_extend(const Options& o, const LoadedComplex& c, Report& r);
int cmd_flow_equiv(const Options& o, const LoadedComplex& c, Report& r);
int cmd_flow_canonical(const Options& o, const LoadedComplex& c, Report& r);
int cmd_chip_stabilize(const Options& o, const LoadedComplex& c, Report& r);
int cmd_chip_recurrent(const Options& o, const LoadedComplex& c, Report& r);
int cmd_chip_representative(const Options& o, const LoadedComplex& c, Report& r);
int cmd_chip_group_law(const Options& o, const LoadedComplex& c, Report& r);

}  // namespace critgroup::cli
