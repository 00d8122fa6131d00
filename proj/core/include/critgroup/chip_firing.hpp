#pragma once

#include <cstdint>
#include <vector>

#include "critgroup/flow.hpp"
#include "critgroup/simplicial_complex.hpp"

namespace critgroup {

using Chips = std::int64_t;

// Chips on the non-bank vertices, listed in vertex order with the bank skipped.
struct ChipState {
  std::vector<Chips> chips;

  friend bool operator==(const ChipState&, const ChipState&) = default;
  friend auto operator<=>(const ChipState&, const ChipState&) = default;
};

struct Stabilization {
  ChipState state;
  /// Firings per non-bank vertex, same indexing as ChipState::chips.
  std::vector<std::uint64_t> firings;
};

// The chip-firing game on the 1-skeleton of a complex with a designated bank.
class ChipFiringGame {
 public:
  /// Throws InputError when the bank is not a vertex or the graph is disconnected.
  ChipFiringGame(const SimplicialComplex& complex, Vertex bank);

  Vertex bank() const { return bank_; }
  /// Non-bank vertices, in ChipState order.
  const std::vector<Vertex>& players() const { return players_; }
  std::size_t size() const { return players_.size(); }
  std::uint64_t degree(std::size_t player) const { return degree_[player]; }
  std::uint64_t bank_degree() const { return bank_edges_.size(); }

  /// Throws InputError on a wrong length or negative entries.
  ChipState make(std::vector<Chips> chips) const;

  bool is_ready(const ChipState& s, std::size_t player) const;
  bool is_stable(const ChipState& s) const;
  /// Throws InputError if the player is not ready.
  ChipState fire(const ChipState& s, std::size_t player) const;
  /// The bank sends one chip along each of its edges.
  ChipState fire_bank(const ChipState& s) const;

  /// Fires the lowest-index ready vertex until none is ready.
  Stabilization stabilize(const ChipState& s) const;
  /// Same result for any schedule; `order` is the preferred scan order.
  Stabilization stabilize(const ChipState& s, const std::vector<std::size_t>& order) const;

  /// Dhar's burning test for stable states. An unstable state is recurrent
  /// when its stabilization s is, every vertex fired at most once on the way,
  /// and the remaining vertices can be fired legally from s plus the bank's chips.
  bool is_recurrent(const ChipState& s) const;
  bool is_critical(const ChipState& s) const { return is_stable(s) && is_recurrent(s); }

  /// Alternates stabilization and bank firing until a stable state repeats.
  ChipState critical_representative(const ChipState& s) const;
  /// All critical states, in lexicographic order. Enumerates the stable
  /// states, so throws InputError when there are more than `limit` of them.
  std::vector<ChipState> critical_states(std::uint64_t limit = 10'000'000) const;

  /// The vertex 0-chain of a state, with the bank carrying minus the chip total.
  Configuration to_configuration(const ChipState& s) const;
  const SimplicialComplex& graph() const { return graph_; }

 private:
  void check(const ChipState& s) const;
  bool burns(const ChipState& s) const;

  SimplicialComplex graph_;
  Vertex bank_;
  std::vector<Vertex> players_;
  std::vector<std::uint64_t> degree_;
  /// Adjacency between players, with multiplicity 1 (simple graph).
  std::vector<std::vector<std::size_t>> neighbours_;
  /// Players adjacent to the bank.
  std::vector<std::size_t> bank_edges_;
  std::size_t bank_index_ = 0;
};

}  // namespace critgroup
