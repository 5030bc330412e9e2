#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Result of a budgeted maximum clique (or independent set) search. When the
/// search closes lower == upper; otherwise [lower, upper] brackets the
/// optimum, lower being the size of the best set found.
struct CliqueResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<Vertex> witness;  // sorted, |witness| == lower
  std::uint64_t node_expansions = 0;
  bool budget_exhausted = false;

  bool exact() const noexcept { return lower == upper; }
};

/// Branch and bound over a bitset adjacency matrix.
///
/// Vertices are renumbered by a degeneracy (minimum-degree removal) order,
/// ties going to the lowest index, with the last-removed vertex first. At
/// every node the candidates are greedily coloured class by class; a vertex
/// whose colour could not improve the incumbent is first offered to an
/// earlier class, possibly by moving its single conflicting neighbour to a
/// later class (recolouring). Only vertices that keep a large colour are
/// branched on, in decreasing colour order.
///
/// Every call to a search node counts as one expansion. Once `budget`
/// expansions are used the search stops and the upper bound is the largest
/// colour bound among the unexplored root branches.
CliqueResult max_clique(const SimpleGraph& graph, std::uint64_t budget = kDefaultNodeBudget);

/// Maximum independent set: the same engine on the complement.
CliqueResult independence_number(const SimpleGraph& graph, std::uint64_t budget = kDefaultNodeBudget);

bool is_clique(const SimpleGraph& graph, std::span<const Vertex> vertices);
bool is_independent_set(const SimpleGraph& graph, std::span<const Vertex> vertices);

}  // namespace ramsey
