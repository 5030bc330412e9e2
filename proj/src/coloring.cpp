#include "ramsey/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ramsey/checksum.hpp"
#include "ramsey/error.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/text_io.hpp"

namespace ramsey {

bool blowup_adjacent(const BlockGraph& block_graph, std::size_t r, Vertex u, Vertex v) {
  if (r == 0) throw ParameterError("blowup multiplicity must be at least 1");
  const std::size_t n = r * block_graph.vertex_count();
  if (u >= n || v >= n) {
    throw ParameterError("blowup vertex out of range [0," + std::to_string(n) + "): " +
                         std::to_string(std::max(u, v)));
  }
  const Vertex bu = blowup_base(u, r);
  const Vertex bv = blowup_base(v, r);
  return bu != bv && block_graph.adjacent(bu, bv);
}

ColoringFamily::ColoringFamily(std::shared_ptr<const BlockGraph> block_graph, std::size_t r,
                               std::vector<std::vector<Vertex>> permutations, std::uint64_t master_seed)
    : block_graph_(std::move(block_graph)), r_(r), perms_(std::move(permutations)), seed_(master_seed) {
  if (!block_graph_) throw ParameterError("coloring family needs a block graph");
  if (r_ == 0) throw ParameterError("blowup multiplicity must be at least 1");
  if (perms_.empty()) throw ParameterError("coloring family needs k >= 1 copies");
  n_ = r_ * block_graph_->vertex_count();
  inverses_.reserve(perms_.size());
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    const auto& perm = perms_[i];
    if (perm.size() != n_) {
      throw StructureError("permutation " + std::to_string(i + 1) + " has " + std::to_string(perm.size()) +
                           " entries, expected N = " + std::to_string(n_));
    }
    std::vector<Vertex> inverse(n_, kInfinite);
    for (Vertex x = 0; x < n_; ++x) {
      const Vertex y = perm[x];
      if (y >= n_) throw StructureError("permutation " + std::to_string(i + 1) + " maps out of range");
      if (inverse[y] != kInfinite) {
        throw StructureError("permutation " + std::to_string(i + 1) + " repeats the value " + std::to_string(y));
      }
      inverse[y] = x;
    }
    inverses_.push_back(std::move(inverse));
  }
}

bool ColoringFamily::in_copy(unsigned copy, Vertex u, Vertex v) const {
  const auto& inv = inverses_[copy];
  return blowup_adjacent(*block_graph_, r_, inv[u], inv[v]);
}

Color ColoringFamily::edge_color(Vertex u, Vertex v) const {
  if (u == v) throw ParameterError("edge_color needs distinct vertices, got " + std::to_string(u) + " twice");
  if (u >= n_ || v >= n_) throw ParameterError("vertex out of range [0," + std::to_string(n_) + ")");
  for (unsigned i = 0; i < k(); ++i)
    if (in_copy(i, u, v)) return i + 1;
  return k() + 1;
}

ColoringFamily sample_coloring_family(std::shared_ptr<const BlockGraph> block_graph, std::size_t r, unsigned k,
                                      std::uint64_t seed, std::size_t vertex_budget) {
  if (!block_graph) throw ParameterError("coloring family needs a block graph");
  if (r == 0) throw ParameterError("blowup multiplicity must be at least 1");
  if (k == 0) throw ParameterError("need k >= 1 colours");
  const std::size_t n = r * block_graph->vertex_count();
  if (n > vertex_budget || n >= kInfinite) {
    throw ResourceError("N = r|F| = " + std::to_string(n) + " exceeds the vertex budget " +
                        std::to_string(vertex_budget) + "; rerun with a budget of at least " + std::to_string(n));
  }
  std::vector<std::vector<Vertex>> perms(k);
  for (unsigned i = 0; i < k; ++i) {
    perms[i].resize(n);
    std::iota(perms[i].begin(), perms[i].end(), Vertex{0});
    Rng rng(derive_seed(seed, Stage::coloring_permutation, i));
    rng.shuffle(std::span<Vertex>(perms[i]));
  }
  return ColoringFamily(std::move(block_graph), r, std::move(perms), seed);
}

std::vector<Edge> materialize_color_class(const ColoringFamily& family, Color color,
                                          std::optional<std::span<const Vertex>> subset, std::size_t edge_budget,
                                          unsigned threads) {
  if (color < 1 || color > family.k() + 1) {
    throw ParameterError("colour " + std::to_string(color) + " outside 1.." + std::to_string(family.k() + 1));
  }
  std::vector<Vertex> vertices;
  if (subset) {
    vertices.assign(subset->begin(), subset->end());
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
      throw ParameterError("vertex subset has repeated entries");
    }
    if (!vertices.empty() && vertices.back() >= family.n_vertices()) {
      throw ParameterError("vertex subset entry out of range");
    }
  } else {
    vertices.resize(family.n_vertices());
    std::iota(vertices.begin(), vertices.end(), Vertex{0});
  }
  const std::size_t m = vertices.size();
  const std::size_t pairs = m < 2 ? 0 : m * (m - 1) / 2;
  if (pairs > edge_budget) {
    throw ResourceError("colour class over " + std::to_string(m) + " vertices has " + std::to_string(pairs) +
                        " pairs, above the edge budget " + std::to_string(edge_budget));
  }
  std::vector<std::vector<Edge>> rows(m);
  parallel_for(m, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (family.edge_color(vertices[i], vertices[j]) == color) rows[i].emplace_back(vertices[i], vertices[j]);
    }
  });
  std::vector<Edge> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;  // rows are in vertex order, so this is already sorted
}

std::string block_graph_fingerprint(const BlockGraph& block_graph) {
  std::ostringstream text;
  write_block_graph(text, block_graph);
  return sha256_hex(text.str()).substr(0, 16);
}

void export_family(std::ostream& out, const ColoringFamily& family) {
  out << "coloring " << family.n_vertices() << ' ' << family.r() << ' ' << family.k() << ' ' << family.master_seed()
      << '\n';
  out << "meta version=" << kFamilyFormatVersion << " block=" << block_graph_fingerprint(family.block_graph()) << '\n';
  for (unsigned i = 0; i < family.k(); ++i) {
    const auto& perm = family.permutation(i);
    for (std::size_t x = 0; x < perm.size(); ++x) out << (x ? " " : "") << perm[x];
    out << '\n';
  }
}

void export_family(const std::string& path, const ColoringFamily& family) {
  std::ofstream out(path);
  if (!out) throw ResourceError("cannot write '" + path + "'");
  export_family(out, family);
}

ColoringFamily import_family(std::istream& in, std::shared_ptr<const BlockGraph> block_graph) {
  if (!block_graph) throw ParameterError("import_family needs the block graph the family was drawn from");
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) reader.fail("empty coloring file");
  auto tokens = split_tokens(line);
  if (tokens.size() != 5 || tokens[0] != "coloring") reader.fail("expected header 'coloring <N> <r> <k> <seed>'");
  const auto n = parse_int<std::size_t>(tokens[1], reader, "N");
  const auto r = parse_int<std::size_t>(tokens[2], reader, "r");
  const auto k = parse_int<unsigned>(tokens[3], reader, "k");
  const auto seed = parse_int<std::uint64_t>(tokens[4], reader, "seed");
  if (k == 0) reader.fail("k must be at least 1");
  if (r == 0) reader.fail("r must be at least 1");
  if (n != r * block_graph->vertex_count()) {
    reader.fail("N = " + std::to_string(n) + " does not equal r|F| = " +
                std::to_string(r * block_graph->vertex_count()));
  }

  if (!reader.next(line)) reader.fail("truncated: missing meta line");
  tokens = split_tokens(line);
  if (tokens.size() != 3 || tokens[0] != "meta") reader.fail("expected 'meta version=<v> block=<fingerprint>'");
  const std::string version_key = "version=";
  const std::string block_key = "block=";
  if (tokens[1].substr(0, version_key.size()) != version_key || tokens[2].substr(0, block_key.size()) != block_key) {
    reader.fail("malformed meta line");
  }
  const auto version = parse_int<unsigned>(tokens[1].substr(version_key.size()), reader, "version");
  if (version != kFamilyFormatVersion) {
    throw FormatError("coloring file version " + std::to_string(version) + " is not supported (expected " +
                      std::to_string(kFamilyFormatVersion) + ")");
  }
  if (tokens[2].substr(block_key.size()) != block_graph_fingerprint(*block_graph)) {
    throw FormatError("coloring file was sampled from a different block graph");
  }

  std::vector<std::vector<Vertex>> perms(k);
  for (unsigned i = 0; i < k; ++i) {
    if (!reader.next(line)) reader.fail("truncated: expected permutation " + std::to_string(i + 1) + " of " + std::to_string(k));
    tokens = split_tokens(line);
    if (tokens.size() != n) {
      reader.fail("permutation " + std::to_string(i + 1) + " has " + std::to_string(tokens.size()) +
                  " entries, expected " + std::to_string(n));
    }
    perms[i].reserve(n);
    for (auto token : tokens) perms[i].push_back(parse_int<Vertex>(token, reader, "image"));
    std::vector<bool> seen(n, false);
    for (Vertex y : perms[i]) {
      if (y >= n || seen[y]) reader.fail("permutation " + std::to_string(i + 1) + " is not a bijection (value " + std::to_string(y) + ")");
      seen[y] = true;
    }
  }
  if (reader.next(line)) reader.fail("trailing content after " + std::to_string(k) + " permutations");
  return ColoringFamily(std::move(block_graph), r, std::move(perms), seed);
}

ColoringFamily import_family(const std::string& path, std::shared_ptr<const BlockGraph> block_graph) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return import_family(in, std::move(block_graph));
}

void write_color_class(std::ostream& out, Color color, std::size_t vertex_count, std::span<const Edge> edges) {
  out << "color " << color << '\n';
  out << "graph " << vertex_count << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace ramsey
