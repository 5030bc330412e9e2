#include "ramsey/clique.hpp"

#include <algorithm>
#include <bit>

namespace ramsey {

namespace {

using Word = std::uint64_t;

inline std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
inline void set_bit(Word* row, std::size_t v) { row[v >> 6] |= Word{1} << (v & 63); }
inline void clear_bit(Word* row, std::size_t v) { row[v >> 6] &= ~(Word{1} << (v & 63)); }

// Degeneracy order: repeatedly remove a minimum-degree vertex (lowest index
// on ties). Returned in removal order.
std::vector<Vertex> degeneracy_removal_order(const SimpleGraph& graph, bool complement) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = complement ? n - 1 - graph.degree(v) : graph.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  // O(n^2) scan: clique instances are dense-matrix sized anyway.
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = kInfinite;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (pick == kInfinite || degree[v] < degree[pick])) pick = v;
    removed[pick] = true;
    order.push_back(pick);
    if (complement) {
      auto row = graph.neighbors(pick);
      std::size_t it = 0;
      for (Vertex w = 0; w < n; ++w) {
        while (it < row.size() && row[it] < w) ++it;
        const bool adjacent_in_g = it < row.size() && row[it] == w;
        if (w != pick && !adjacent_in_g && !removed[w]) --degree[w];
      }
    } else {
      for (Vertex w : graph.neighbors(pick))
        if (!removed[w]) --degree[w];
    }
  }
  return order;
}

class CliqueSearch {
 public:
  CliqueSearch(const SimpleGraph& graph, bool complement, std::uint64_t budget)
      : n_(graph.vertex_count()), words_(word_count(n_)), budget_(budget) {
    const auto removal = degeneracy_removal_order(graph, complement);
    original_.resize(n_);
    std::vector<Vertex> position(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      original_[i] = removal[n_ - 1 - i];
      position[original_[i]] = static_cast<Vertex>(i);
    }
    adjacency_.assign(n_ * words_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      Word* row = adjacency_.data() + position[u] * words_;
      if (complement) {
        for (Vertex w = 0; w < n_; ++w)
          if (w != u) set_bit(row, position[w]);
        for (Vertex w : graph.neighbors(u)) clear_bit(row, position[w]);
      } else {
        for (Vertex w : graph.neighbors(u)) set_bit(row, position[w]);
      }
    }
  }

  CliqueResult run() {
    CliqueResult result;
    if (n_ == 0) return result;
    levels_.reserve(n_ + 1);
    greedy_seed();
    std::vector<Word> root(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) set_bit(root.data(), v);
    expand(0, root.data());

    result.lower = best_.size();
    // An abort before the root was coloured leaves only the trivial bound.
    if (aborted_ && nodes_ <= 1) open_bound_ = n_;
    result.upper = aborted_ ? std::max(best_.size(), open_bound_) : best_.size();
    result.node_expansions = nodes_;
    result.budget_exhausted = aborted_;
    for (Vertex v : best_) result.witness.push_back(original_[v]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
  }

 private:
  const Word* row(std::size_t v) const { return adjacency_.data() + v * words_; }

  struct Level {
    std::vector<Word> candidates;  // P for the child
    std::vector<Word> uncolored;
    std::vector<Word> color_pool;
    std::vector<Word> classes;  // (kmin - 1) class bitsets, flattened
    std::vector<Vertex> order;
    std::vector<unsigned> colors;
  };

  // levels_ is reserved to n + 1 entries up front, so references stay valid
  // while deeper levels are appended.
  Level& level(std::size_t depth) {
    while (levels_.size() <= depth) {
      Level l;
      l.candidates.resize(words_);
      l.uncolored.resize(words_);
      l.color_pool.resize(words_);
      levels_.push_back(std::move(l));
    }
    return levels_[depth];
  }

  // Greedy start: from each of the first few vertices in search order, keep
  // adding the candidate with most candidate neighbours.
  void greedy_seed() {
    std::vector<Word> cand(words_);
    const std::size_t starts = std::min<std::size_t>(n_, 32);
    for (std::size_t s = 0; s < starts; ++s) {
      std::vector<Vertex> clique{static_cast<Vertex>(s)};
      std::copy(row(s), row(s) + words_, cand.begin());
      while (true) {
        std::size_t pick = n_, pick_score = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          for (Word bits = cand[w]; bits; bits &= bits - 1) {
            const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            std::size_t score = 0;
            for (std::size_t x = 0; x < words_; ++x) score += static_cast<std::size_t>(std::popcount(cand[x] & row(v)[x]));
            if (pick == n_ || score > pick_score) {
              pick = v;
              pick_score = score;
            }
          }
        }
        if (pick == n_) break;
        clique.push_back(static_cast<Vertex>(pick));
        for (std::size_t x = 0; x < words_; ++x) cand[x] &= row(pick)[x];
      }
      if (clique.size() > best_.size()) best_ = clique;
    }
  }

  // Offers v to an earlier colour class: directly when it has no neighbour
  // there, or by moving its single neighbour w to another class free of
  // w's neighbours.
  bool recolor(Level& lv, std::size_t class_count, std::size_t v) {
    const Word* nv = row(v);
    for (std::size_t j = 0; j < class_count; ++j) {
      Word* cj = lv.classes.data() + j * words_;
      std::size_t count = 0, w = 0;
      for (std::size_t x = 0; x < words_ && count < 2; ++x) {
        const Word hit = nv[x] & cj[x];
        if (hit) {
          count += static_cast<std::size_t>(std::popcount(hit));
          w = x * 64 + static_cast<std::size_t>(std::countr_zero(hit));
        }
      }
      if (count == 0) {
        set_bit(cj, v);
        return true;
      }
      if (count != 1) continue;
      const Word* nw = row(w);
      for (std::size_t l = j + 1; l < class_count; ++l) {
        Word* cl = lv.classes.data() + l * words_;
        bool free = true;
        for (std::size_t x = 0; x < words_ && free; ++x) free = (nw[x] & cl[x]) == 0;
        if (free) {
          clear_bit(cj, w);
          set_bit(cl, w);
          set_bit(cj, v);
          return true;
        }
      }
    }
    return false;
  }

  void color(Level& lv, const Word* p, std::size_t kmin) {
    lv.order.clear();
    lv.colors.clear();
    const std::size_t class_count = kmin > 1 ? kmin - 1 : 0;
    lv.classes.assign(class_count * words_, 0);
    std::copy(p, p + words_, lv.uncolored.begin());
    Word* u = lv.uncolored.data();
    Word* q = lv.color_pool.data();
    std::size_t k = 0;
    std::size_t first_word = 0;
    while (true) {
      while (first_word < words_ && u[first_word] == 0) ++first_word;
      if (first_word == words_) break;
      ++k;
      std::copy(u, u + words_, q);
      for (std::size_t x = first_word; x < words_; ++x) {
        while (q[x]) {
          const std::size_t v = x * 64 + static_cast<std::size_t>(std::countr_zero(q[x]));
          clear_bit(u, v);
          clear_bit(q, v);
          if (k >= kmin && class_count > 0 && recolor(lv, class_count, v)) continue;
          const Word* nv = row(v);
          for (std::size_t y = x; y < words_; ++y) q[y] &= ~nv[y];
          if (k < kmin) {
            set_bit(lv.classes.data() + (k - 1) * words_, v);
          } else {
            lv.order.push_back(static_cast<Vertex>(v));
            lv.colors.push_back(static_cast<unsigned>(k));
          }
        }
      }
    }
  }

  void expand(std::size_t depth, Word* p) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    Level& lv = level(depth);
    const std::size_t size = current_.size();
    const std::size_t kmin = best_.size() >= size ? best_.size() - size + 1 : 1;
    color(lv, p, kmin);
    for (std::size_t idx = lv.order.size(); idx-- > 0;) {
      const std::size_t bound = size + lv.colors[idx];
      if (bound <= best_.size()) return;
      const std::size_t v = lv.order[idx];
      Word* child = lv.candidates.data();
      const Word* nv = row(v);
      Word any = 0;
      for (std::size_t x = 0; x < words_; ++x) {
        child[x] = p[x] & nv[x];
        any |= child[x];
      }
      current_.push_back(static_cast<Vertex>(v));
      if (!any) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(depth + 1, child);
      }
      current_.pop_back();
      if (aborted_) {
        if (depth == 0) open_bound_ = std::max(open_bound_, bound);
        return;
      }
      clear_bit(p, v);
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t open_bound_ = 0;
  std::vector<Vertex> original_;
  std::vector<Word> adjacency_;
  std::vector<Level> levels_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

CliqueResult max_clique(const SimpleGraph& graph, std::uint64_t budget) {
  return CliqueSearch(graph, false, budget).run();
}

CliqueResult independence_number(const SimpleGraph& graph, std::uint64_t budget) {
  return CliqueSearch(graph, true, budget).run();
}

bool is_clique(const SimpleGraph& graph, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= graph.vertex_count()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !graph.has_edge(vertices[i], vertices[j])) return false;
  }
  return true;
}

bool is_independent_set(const SimpleGraph& graph, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= graph.vertex_count()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || graph.has_edge(vertices[i], vertices[j])) return false;
  }
  return true;
}

}  // namespace ramsey
