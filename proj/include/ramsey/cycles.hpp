#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Exact girth by a BFS from every vertex, cut off once a root can no longer
/// beat the best cycle seen. kInfinite for forests.
std::uint32_t girth(const SimpleGraph& graph, unsigned threads = 1);

/// Largest eccentricity, or kInfinite when the graph is disconnected.
std::uint32_t diameter(const SimpleGraph& graph, unsigned threads = 1);

/// True iff `cycle` lists distinct vertices forming a closed cycle in graph.
bool is_cycle(const SimpleGraph& graph, std::span<const Vertex> cycle);

enum class CycleSearchMode { first_witness, exhaustive_absence };

inline constexpr unsigned kMaxCycleSearchLength = 8;

struct CycleSearchResult {
  unsigned length = 0;
  CycleSearchMode mode = CycleSearchMode::first_witness;
  std::optional<std::vector<Vertex>> witness;

  // Proof-of-search counters. When no witness exists they certify that every
  // root was scanned and every half-path pair was joined.
  std::uint64_t roots_scanned = 0;
  std::uint64_t half_paths = 0;
  std::uint64_t joins_checked = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;

  bool found() const noexcept { return witness.has_value(); }
};

/// Finds a simple cycle of exactly `length` vertices (3..8).
///
/// Each cycle is rooted at its smallest vertex v. Simple paths leaving v
/// through larger vertices are enumerated to depth floor(L/2) and ceil(L/2);
/// paths of both depths ending at the same vertex with disjoint interiors
/// close an L-cycle. This is exact: absence means no L-cycle exists.
/// Returned witnesses have already been re-validated against the graph.
CycleSearchResult find_cycle_of_length(const SimpleGraph& graph, unsigned length,
                                       CycleSearchMode mode = CycleSearchMode::first_witness);

const char* mode_name(CycleSearchMode mode) noexcept;
CycleSearchMode parse_cycle_mode(const std::string& text);

}  // namespace ramsey
