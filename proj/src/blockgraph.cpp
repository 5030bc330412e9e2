#include "ramsey/blockgraph.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "ramsey/cycles.hpp"
#include "ramsey/error.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/text_io.hpp"

namespace ramsey {

BlockGraph::BlockGraph(std::string base_name, std::size_t vertex_count, std::vector<Block> blocks, std::uint64_t seed)
    : base_name_(std::move(base_name)), blocks_(std::move(blocks)), seed_(seed), membership_(vertex_count) {
  std::size_t total = 0;
  for (Vertex a = 0; a < blocks_.size(); ++a) {
    auto& block = blocks_[a];
    std::sort(block.s_side.begin(), block.s_side.end());
    std::sort(block.t_side.begin(), block.t_side.end());
    for (bool s_side : {true, false}) {
      for (Vertex v : s_side ? block.s_side : block.t_side) {
        if (v >= vertex_count) throw StructureError("block " + std::to_string(a) + " vertex out of range");
        if (!membership_[v].empty() && membership_[v].back().block == a) {
          throw StructureError("vertex " + std::to_string(v) + " appears twice in block " + std::to_string(a));
        }
        membership_[v].push_back({a, s_side});
      }
    }
    total += block.s_side.size() * block.t_side.size();
  }
  edges_.reserve(total);
  for (const auto& block : blocks_)
    for (Vertex s : block.s_side)
      for (Vertex t : block.t_side) edges_.emplace_back(std::min(s, t), std::max(s, t));
  try {
    edges_ = normalize_edges(std::move(edges_));
  } catch (const StructureError& e) {
    throw StructureError(std::string("blocks overlap in an edge (base graph has a 4-cycle): ") + e.what());
  }
  graph_ = SimpleGraph(vertex_count, edges_);
}

Vertex BlockGraph::block_of_edge(Vertex u, Vertex v) const {
  if (u < membership_.size() && v < membership_.size() && u != v) {
    for (const auto& mu : membership_[u])
      for (const auto& mv : membership_[v])
        if (mu.block == mv.block && mu.on_s_side != mv.on_s_side) return mu.block;
  }
  throw LookupError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge of F");
}

BlockGraph random_block_construction(const BipartiteIncidenceGraph& base, std::uint64_t seed, unsigned threads) {
  const auto& cert = base.certificate();
  if (!cert) throw PreconditionError("base graph '" + base.name() + "' is not certified");
  if (cert->girth < 6) {
    throw PreconditionError("base graph girth " + std::to_string(cert->girth) +
                            " < 6: blocks would share edges");
  }
  std::vector<Block> blocks(base.part_a_size());
  parallel_for(blocks.size(), threads, [&](std::size_t a) {
    Rng rng(derive_seed(seed, Stage::block_partition, a));
    for (Vertex b : base.neighbors_of_a(static_cast<Vertex>(a))) {
      (rng.coin() ? blocks[a].s_side : blocks[a].t_side).push_back(b);
    }
  });
  return BlockGraph(base.name(), base.part_b_size(), std::move(blocks), seed);
}

std::vector<unsigned> guaranteed_forbidden_odd_cycles(std::uint32_t base_girth) {
  std::vector<unsigned> out;
  for (unsigned j = 3; base_girth == kInfinite ? j <= kMaxCycleSearchLength : 2ull * j < base_girth; j += 2) {
    out.push_back(j);
  }
  return out;
}

void write_block_graph(std::ostream& out, const BlockGraph& graph) {
  out << "blockgraph " << graph.vertex_count() << ' ' << graph.blocks().size() << ' ' << graph.seed() << '\n';
  out << "base " << graph.base_name() << '\n';
  for (std::size_t a = 0; a < graph.blocks().size(); ++a) {
    const auto& block = graph.blocks()[a];
    out << a << " :";
    for (Vertex s : block.s_side) out << ' ' << s;
    out << " |";
    for (Vertex t : block.t_side) out << ' ' << t;
    out << '\n';
  }
  out << "edges " << graph.edges().size() << '\n';
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

BlockGraph read_block_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) reader.fail("empty block graph file");
  auto tokens = split_tokens(line);
  if (tokens.size() != 4 || tokens[0] != "blockgraph") reader.fail("expected header 'blockgraph <|B|> <|A|> <seed>'");
  const auto b_size = parse_int<std::size_t>(tokens[1], reader, "|B|");
  const auto a_size = parse_int<std::size_t>(tokens[2], reader, "|A|");
  const auto seed = parse_int<std::uint64_t>(tokens[3], reader, "seed");

  if (!reader.next(line)) reader.fail("missing 'base <name>' line");
  tokens = split_tokens(line);
  if (tokens.size() != 2 || tokens[0] != "base") reader.fail("expected 'base <name>'");
  std::string name(tokens[1]);

  std::vector<Block> blocks(a_size);
  for (std::size_t a = 0; a < a_size; ++a) {
    if (!reader.next(line)) reader.fail("truncated: expected block line for A-vertex " + std::to_string(a));
    tokens = split_tokens(line);
    if (tokens.size() < 3 || tokens[1] != ":") reader.fail("expected '<a> : <S> | <T>'");
    if (parse_int<std::size_t>(tokens[0], reader, "block index") != a) {
      reader.fail("block lines out of order, expected " + std::to_string(a));
    }
    bool t_side = false;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      if (tokens[i] == "|") {
        if (t_side) reader.fail("second '|' in block line");
        t_side = true;
        continue;
      }
      const auto v = parse_int<Vertex>(tokens[i], reader, "vertex");
      if (v >= b_size) reader.fail("vertex " + std::to_string(v) + " out of range");
      (t_side ? blocks[a].t_side : blocks[a].s_side).push_back(v);
    }
    if (!t_side) reader.fail("block line missing '|'");
  }

  if (!reader.next(line)) reader.fail("missing 'edges <|E|>' line");
  tokens = split_tokens(line);
  if (tokens.size() != 2 || tokens[0] != "edges") reader.fail("expected 'edges <|E|>'");
  const auto e_size = parse_int<std::size_t>(tokens[1], reader, "|E|");
  std::vector<Edge> listed;
  listed.reserve(e_size);
  while (reader.next(line)) {
    tokens = split_tokens(line);
    if (tokens.size() != 2) reader.fail("expected 'u v'");
    listed.emplace_back(parse_int<Vertex>(tokens[0], reader, "vertex"), parse_int<Vertex>(tokens[1], reader, "vertex"));
  }
  if (listed.size() != e_size) {
    reader.fail("header declares " + std::to_string(e_size) + " edges, file has " + std::to_string(listed.size()));
  }
  BlockGraph graph(std::move(name), b_size, std::move(blocks), seed);
  if (graph.edges() != normalize_edges(std::move(listed))) {
    throw ParseError("edge list does not match the edges derived from the blocks", 0);
  }
  return graph;
}

BlockGraph load_block_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_block_graph(in);
}

}  // namespace ramsey
