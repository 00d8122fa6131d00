#include "critgroup/chip_firing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "critgroup/errors.hpp"

namespace critgroup {

namespace {

Chips checked_add(Chips a, Chips b) {
  Chips r;
  if (__builtin_add_overflow(a, b, &r)) throw InputError("chip count overflows 64 bits");
  return r;
}

}  // namespace

ChipFiringGame::ChipFiringGame(const SimplicialComplex& complex, Vertex bank)
    : graph_(complex.dimension() >= 1 ? complex.skeleton(1) : complex), bank_(bank) {
  const std::vector<Vertex> verts = graph_.vertices();
  if (!std::binary_search(verts.begin(), verts.end(), bank))
    throw InputError("bank " + std::to_string(bank) + " is not a vertex of the complex");
  std::vector<std::size_t> slot(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (verts[v] == bank) {
      bank_index_ = v;
      continue;
    }
    slot[v] = players_.size();
    players_.push_back(verts[v]);
  }
  degree_.assign(players_.size(), 0);
  neighbours_.resize(players_.size());

  std::vector<std::vector<std::size_t>> adjacency(verts.size());
  auto pos = [&](Vertex x) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };
  if (graph_.dimension() >= 1) {
    for (const Simplex& e : graph_.faces(1)) {
      const std::size_t a = pos(e.vertices()[0]);
      const std::size_t b = pos(e.vertices()[1]);
      adjacency[a].push_back(b);
      adjacency[b].push_back(a);
    }
  }
  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (std::size_t w : adjacency[v]) {
      if (v == bank_index_) {
        bank_edges_.push_back(slot[w]);
      } else {
        ++degree_[slot[v]];
        if (w != bank_index_) neighbours_[slot[v]].push_back(slot[w]);
      }
    }
  }

  std::vector<bool> seen(verts.size(), false);
  std::deque<std::size_t> queue{bank_index_};
  seen[bank_index_] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != verts.size()) throw InputError("chip-firing needs a connected graph");
}

void ChipFiringGame::check(const ChipState& s) const {
  if (s.chips.size() != players_.size())
    throw InputError("chip state has " + std::to_string(s.chips.size()) + " entries, expected " +
                     std::to_string(players_.size()));
  for (Chips c : s.chips)
    if (c < 0) throw InputError("chip counts must be nonnegative");
}

ChipState ChipFiringGame::make(std::vector<Chips> chips) const {
  ChipState s{std::move(chips)};
  check(s);
  return s;
}

bool ChipFiringGame::is_ready(const ChipState& s, std::size_t player) const {
  return static_cast<std::uint64_t>(s.chips.at(player)) >= degree_.at(player);
}

bool ChipFiringGame::is_stable(const ChipState& s) const {
  check(s);
  for (std::size_t v = 0; v < size(); ++v)
    if (is_ready(s, v)) return false;
  return true;
}

ChipState ChipFiringGame::fire(const ChipState& s, std::size_t player) const {
  check(s);
  if (player >= size()) throw InputError("no such player");
  if (!is_ready(s, player))
    throw InputError("vertex " + std::to_string(players_[player]) + " is not ready");
  ChipState out = s;
  out.chips[player] -= static_cast<Chips>(degree_[player]);
  for (std::size_t w : neighbours_[player]) out.chips[w] = checked_add(out.chips[w], 1);
  return out;
}

ChipState ChipFiringGame::fire_bank(const ChipState& s) const {
  check(s);
  ChipState out = s;
  for (std::size_t w : bank_edges_) out.chips[w] = checked_add(out.chips[w], 1);
  return out;
}

Stabilization ChipFiringGame::stabilize(const ChipState& s) const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return stabilize(s, order);
}

Stabilization ChipFiringGame::stabilize(const ChipState& s, const std::vector<std::size_t>& order) const {
  check(s);
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != size() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (!sorted.empty() && sorted.back() >= size()))
    throw InputError("stabilize: order must be a permutation of the players");

  Stabilization result{s, std::vector<std::uint64_t>(size(), 0)};
  auto& chips = result.state.chips;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v : order) {
      const auto d = static_cast<Chips>(degree_[v]);
      if (d == 0 || chips[v] < d) continue;
      // fire v as often as it can at once
      const Chips times = chips[v] / d;
      chips[v] -= times * d;
      for (std::size_t w : neighbours_[v]) chips[w] = checked_add(chips[w], times);
      result.firings[v] += static_cast<std::uint64_t>(times);
      changed = true;
    }
  }
  return result;
}

bool ChipFiringGame::burns(const ChipState& s) const {
  // stable s: fire the bank, then each vertex must fire exactly once
  const Stabilization after = stabilize(fire_bank(s));
  if (after.state != s) return false;
  return std::all_of(after.firings.begin(), after.firings.end(), [](std::uint64_t f) { return f == 1; });
}

bool ChipFiringGame::is_recurrent(const ChipState& s) const {
  check(s);
  if (size() == 0) return true;
  const Stabilization st = stabilize(s);
  if (!burns(st.state)) return false;
  if (std::any_of(st.firings.begin(), st.firings.end(), [](std::uint64_t f) { return f > 1; }))
    return false;
  std::vector<bool> pending(size());
  for (std::size_t v = 0; v < size(); ++v) pending[v] = st.firings[v] == 0;
  ChipState cur = fire_bank(st.state);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t v = 0; v < size(); ++v) {
      if (pending[v] && is_ready(cur, v)) {
        cur = fire(cur, v);
        pending[v] = false;
        progress = true;
      }
    }
  }
  return std::none_of(pending.begin(), pending.end(), [](bool p) { return p; });
}

ChipState ChipFiringGame::critical_representative(const ChipState& s) const {
  check(s);
  std::set<ChipState> seen;
  ChipState cur = stabilize(s).state;
  while (seen.insert(cur).second) cur = stabilize(fire_bank(cur)).state;
  return cur;
}

std::vector<ChipState> ChipFiringGame::critical_states(std::uint64_t limit) const {
  long double total = 1;
  for (auto d : degree_) total *= static_cast<long double>(std::max<std::uint64_t>(d, 1));
  if (total > static_cast<long double>(limit))
    throw InputError("too many stable states to enumerate");
  std::vector<ChipState> out;
  ChipState cur{std::vector<Chips>(size(), 0)};
  while (true) {
    if (is_recurrent(cur)) out.push_back(cur);
    std::size_t v = size();
    while (v > 0) {
      --v;
      if (static_cast<std::uint64_t>(cur.chips[v]) + 1 < degree_[v]) {
        ++cur.chips[v];
        break;
      }
      cur.chips[v] = 0;
      if (v == 0) return out;
    }
    if (size() == 0) return out;
  }
}

Configuration ChipFiringGame::to_configuration(const ChipState& s) const {
  check(s);
  Configuration c{0, IntegerVector(players_.size() + 1)};
  Integer total = 0;
  for (std::size_t v = 0; v < size(); ++v) {
    const std::size_t idx = v < bank_index_ ? v : v + 1;
    c.values[idx] = Integer(static_cast<long>(s.chips[v]));
    total += c.values[idx];
  }
  c.values[bank_index_] = -total;
  return c;
}

}  // namespace critgroup
