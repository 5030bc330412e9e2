#include "ramsey/cycles.hpp"

#include <algorithm>

#include "ramsey/error.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

std::uint32_t shortest_cycle_through_root(const SimpleGraph& graph, Vertex root, std::uint32_t best,
                                          std::vector<std::uint32_t>& dist, std::vector<Vertex>& parent,
                                          std::vector<Vertex>& queue) {
  queue.clear();
  queue.push_back(root);
  dist[root] = 0;
  parent[root] = root;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (best != kInfinite && 2 * dist[u] + 1 >= best) break;
    for (Vertex w : graph.neighbors(u)) {
      if (dist[w] == kInfinite) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u]) {
        best = std::min(best, dist[u] + dist[w] + 1);
      }
    }
  }
  for (Vertex v : queue) dist[v] = kInfinite;
  return best;
}

std::uint32_t eccentricity(const SimpleGraph& graph, Vertex root, std::vector<std::uint32_t>& dist,
                           std::vector<Vertex>& queue) {
  queue.clear();
  queue.push_back(root);
  dist[root] = 0;
  std::uint32_t far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    far = std::max(far, dist[u]);
    for (Vertex w : graph.neighbors(u)) {
      if (dist[w] == kInfinite) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  const bool reached_all = queue.size() == graph.vertex_count();
  for (Vertex v : queue) dist[v] = kInfinite;
  return reached_all ? far : kInfinite;
}

}  // namespace

std::uint32_t girth(const SimpleGraph& graph, unsigned threads) {
  const std::size_t n = graph.vertex_count();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  std::vector<std::uint32_t> per_worker(workers, kInfinite);
  // Each worker sweeps a contiguous root range with its own running best;
  // the final min-reduction is order independent.
  parallel_for(workers, static_cast<unsigned>(workers), [&](std::size_t w) {
    std::vector<std::uint32_t> dist(n, kInfinite);
    std::vector<Vertex> parent(n), queue;
    const std::size_t chunk = (n + workers - 1) / workers;
    const std::size_t end = std::min(n, (w + 1) * chunk);
    std::uint32_t best = kInfinite;
    for (std::size_t root = w * chunk; root < end; ++root) {
      best = shortest_cycle_through_root(graph, static_cast<Vertex>(root), best, dist, parent, queue);
      if (best == 3) break;
    }
    per_worker[w] = best;
  });
  return *std::min_element(per_worker.begin(), per_worker.end());
}

std::uint32_t diameter(const SimpleGraph& graph, unsigned threads) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return 0;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  std::vector<std::uint32_t> per_worker(workers, 0);
  parallel_for(workers, static_cast<unsigned>(workers), [&](std::size_t w) {
    std::vector<std::uint32_t> dist(n, kInfinite);
    std::vector<Vertex> queue;
    const std::size_t chunk = (n + workers - 1) / workers;
    const std::size_t end = std::min(n, (w + 1) * chunk);
    std::uint32_t far = 0;
    for (std::size_t root = w * chunk; root < end; ++root) {
      far = std::max(far, eccentricity(graph, static_cast<Vertex>(root), dist, queue));
      if (far == kInfinite) break;
    }
    per_worker[w] = far;
  });
  return *std::max_element(per_worker.begin(), per_worker.end());
}

bool is_cycle(const SimpleGraph& graph, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!graph.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

const char* mode_name(CycleSearchMode mode) noexcept {
  return mode == CycleSearchMode::first_witness ? "first-witness" : "exhaustive-absence";
}

CycleSearchMode parse_cycle_mode(const std::string& text) {
  if (text == "first-witness") return CycleSearchMode::first_witness;
  if (text == "exhaustive-absence") return CycleSearchMode::exhaustive_absence;
  throw ParameterError("unknown cycle search mode '" + text + "'");
}

namespace {

// Half-path store for one root. Paths are kept flat: `depth` vertices each,
// excluding the root, the last one being the endpoint.
struct HalfPaths {
  unsigned depth = 0;
  std::vector<Vertex> flat;

  std::size_t size() const { return depth ? flat.size() / depth : 0; }
  std::span<const Vertex> at(std::size_t i) const { return {flat.data() + i * depth, depth}; }
};

class CycleSearcher {
 public:
  CycleSearcher(const SimpleGraph& graph, unsigned length)
      : graph_(graph),
        short_depth_(length / 2),
        long_depth_(length - length / 2),
        on_path_(graph.vertex_count(), false),
        bucket_(graph.vertex_count()) {
    short_.depth = short_depth_;
    long_.depth = long_depth_;
  }

  std::optional<std::vector<Vertex>> search_root(Vertex root, CycleSearchResult& stats) {
    root_ = root;
    short_.flat.clear();
    long_.flat.clear();
    path_.clear();
    extend(root);
    stats.half_paths += short_.size() + long_.size();

    std::vector<Vertex> touched;
    for (std::size_t i = 0; i < long_.size(); ++i) {
      const Vertex end = long_.at(i).back();
      if (bucket_[end].empty()) touched.push_back(end);
      bucket_[end].push_back(static_cast<std::uint32_t>(i));
    }
    std::optional<std::vector<Vertex>> found;
    for (std::size_t i = 0; i < short_.size() && !found; ++i) {
      const auto p = short_.at(i);
      for (std::uint32_t j : bucket_[p.back()]) {
        ++stats.joins_checked;
        const auto q = long_.at(j);
        if (interiors_disjoint(p, q)) {
          found = stitch(p, q);
          break;
        }
      }
    }
    for (Vertex v : touched) bucket_[v].clear();
    return found;
  }

 private:
  void extend(Vertex at) {
    const auto depth = static_cast<unsigned>(path_.size());
    if (depth == short_depth_ && depth > 0) short_.flat.insert(short_.flat.end(), path_.begin(), path_.end());
    if (depth == long_depth_) {
      long_.flat.insert(long_.flat.end(), path_.begin(), path_.end());
      return;
    }
    for (Vertex w : graph_.neighbors(at)) {
      if (w <= root_ || on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  static bool interiors_disjoint(std::span<const Vertex> p, std::span<const Vertex> q) {
    for (std::size_t a = 0; a + 1 < p.size(); ++a)
      for (std::size_t b = 0; b + 1 < q.size(); ++b)
        if (p[a] == q[b]) return false;
    return true;
  }

  std::vector<Vertex> stitch(std::span<const Vertex> p, std::span<const Vertex> q) const {
    std::vector<Vertex> cycle{root_};
    cycle.insert(cycle.end(), p.begin(), p.end());
    for (std::size_t b = q.size() - 1; b-- > 0;) cycle.push_back(q[b]);
    return cycle;
  }

  const SimpleGraph& graph_;
  unsigned short_depth_;
  unsigned long_depth_;
  Vertex root_ = 0;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  HalfPaths short_;
  HalfPaths long_;
  std::vector<std::vector<std::uint32_t>> bucket_;
};

}  // namespace

CycleSearchResult find_cycle_of_length(const SimpleGraph& graph, unsigned length, CycleSearchMode mode) {
  if (length > kMaxCycleSearchLength) {
    throw UnsupportedError("cycle length " + std::to_string(length) + " exceeds the supported maximum of " +
                           std::to_string(kMaxCycleSearchLength));
  }
  if (length < 3) throw ParameterError("cycle length must be at least 3");

  CycleSearchResult result;
  result.length = length;
  result.mode = mode;
  result.vertex_count = graph.vertex_count();
  result.edge_count = graph.edge_count();

  CycleSearcher searcher(graph, length);
  for (Vertex root = 0; root < graph.vertex_count(); ++root) {
    ++result.roots_scanned;
    if (auto cycle = searcher.search_root(root, result)) {
      if (!is_cycle(graph, *cycle) || cycle->size() != length) {
        throw StructureError("internal: cycle search produced an invalid witness");
      }
      result.witness = std::move(cycle);
      break;
    }
  }
  return result;
}

}  // namespace ramsey
