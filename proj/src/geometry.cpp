#include "ramsey/geometry.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ramsey/cycles.hpp"
#include "ramsey/error.hpp"
#include "ramsey/finite_field.hpp"
#include "ramsey/text_io.hpp"

namespace ramsey {

BipartiteIncidenceGraph::BipartiteIncidenceGraph(std::string name, std::size_t part_a_size, std::size_t part_b_size,
                                                 std::vector<std::vector<Vertex>> adjacency,
                                                 std::optional<unsigned> q)
    : name_(std::move(name)), q_(q), a_adj_(std::move(adjacency)), b_adj_(part_b_size) {
  if (a_adj_.size() != part_a_size) {
    throw StructureError("adjacency has " + std::to_string(a_adj_.size()) + " rows, expected " +
                         std::to_string(part_a_size));
  }
  for (Vertex a = 0; a < a_adj_.size(); ++a) {
    auto& row = a_adj_[a];
    std::sort(row.begin(), row.end());
    if (auto dup = std::adjacent_find(row.begin(), row.end()); dup != row.end()) {
      throw StructureError("duplicate edge " + std::to_string(a) + " " + std::to_string(*dup));
    }
    if (!row.empty() && row.back() >= part_b_size) {
      throw StructureError("B-index " + std::to_string(row.back()) + " out of range [0," +
                           std::to_string(part_b_size) + ")");
    }
    for (Vertex b : row) b_adj_[b].push_back(a);
    edge_count_ += row.size();
  }
}

SimpleGraph BipartiteIncidenceGraph::to_simple_graph() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  const auto offset = static_cast<Vertex>(part_a_size());
  for (Vertex a = 0; a < part_a_size(); ++a)
    for (Vertex b : a_adj_[a]) edges.emplace_back(a, offset + b);
  return SimpleGraph(part_a_size() + part_b_size(), edges);
}

BipartiteIncidenceGraph BipartiteIncidenceGraph::transposed() const {
  return BipartiteIncidenceGraph(name_, part_b_size(), part_a_size(), b_adj_, q_);
}

BipartiteIncidenceGraph build_projective_plane_incidence(unsigned q) {
  if (q > 101) throw ParameterError("PG(2,q) supported for q <= 101, got " + std::to_string(q));
  const FiniteField field(q);

  // Normalised homogeneous coordinates: the first non-zero entry is 1.
  std::vector<std::array<unsigned, 3>> elems;
  for (unsigned y = 0; y < q; ++y)
    for (unsigned z = 0; z < q; ++z) elems.push_back({1, y, z});
  for (unsigned z = 0; z < q; ++z) elems.push_back({0, 1, z});
  elems.push_back({0, 0, 1});

  std::vector<std::vector<Vertex>> adjacency(elems.size());
  for (Vertex p = 0; p < elems.size(); ++p) {
    const auto& x = elems[p];
    for (Vertex l = 0; l < elems.size(); ++l) {
      const auto& u = elems[l];
      const unsigned dot = field.add(field.add(field.mul(x[0], u[0]), field.mul(x[1], u[1])), field.mul(x[2], u[2]));
      if (dot == 0) adjacency[p].push_back(l);
    }
  }
  return BipartiteIncidenceGraph("pg2-" + std::to_string(q), elems.size(), elems.size(), std::move(adjacency), q);
}

BipartiteIncidenceGraph build_from_lcf(std::span<const int> offsets, unsigned repeats, std::string name) {
  if (offsets.empty() || repeats == 0) throw ParameterError("LCF code needs offsets and a positive repeat count");
  const std::size_t n = offsets.size() * repeats;
  if (n % 2 != 0) throw StructureError("LCF graph on an odd number of vertices cannot be bipartite");
  if (n < 4) throw StructureError("LCF graph needs at least 4 vertices");

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  const auto len = static_cast<long long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long off = offsets[i % offsets.size()];
    const auto j = static_cast<Vertex>((((static_cast<long long>(i) + off) % len) + len) % len);
    if (j == i) throw StructureError("LCF chord at vertex " + std::to_string(i) + " is a self loop");
    if (i < j) edges.emplace_back(static_cast<Vertex>(i), j);
    // i > j: the chord must already have been added from j's side.
    else if (!std::count(edges.begin(), edges.end(), Edge{j, static_cast<Vertex>(i)})) {
      throw StructureError("LCF chord " + std::to_string(i) + " -> " + std::to_string(j) +
                           " is not reciprocated; graph would not be cubic");
    }
  }
  const auto normalized = normalize_edges(edges);  // throws on duplicate edges
  // A chord i -> j added from i but not answered by j's offset leaves j with
  // degree 4, so insist on cubic.
  const SimpleGraph g(n, normalized);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 3) {
      throw StructureError("LCF graph is not cubic at vertex " + std::to_string(v) + " (degree " +
                           std::to_string(g.degree(v)) + ")");
    }
  }

  std::vector<int> side(n, -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        throw StructureError("LCF graph is not bipartite (odd cycle through edge " + std::to_string(v) + " " +
                             std::to_string(w) + ")");
      }
    }
  }
  std::vector<Vertex> index(n);
  std::array<Vertex, 2> counter{0, 0};
  for (Vertex v = 0; v < n; ++v) index[v] = counter[side[v]]++;
  std::vector<std::vector<Vertex>> adjacency(counter[0]);
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] != 0) continue;
    for (Vertex w : g.neighbors(v)) adjacency[index[v]].push_back(index[w]);
  }
  return BipartiteIncidenceGraph(std::move(name), counter[0], counter[1], std::move(adjacency));
}

BipartiteIncidenceGraph parse_lcf(std::istream& in, std::string name) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) reader.fail("empty LCF file");
  auto header = split_tokens(line);
  if (header.size() != 2 || header[0] != "lcf") reader.fail("expected header 'lcf <repeats>'");
  const auto repeats = parse_int<unsigned>(header[1], reader, "repeat count");
  std::vector<int> offsets;
  while (reader.next(line)) {
    for (auto token : split_tokens(line)) {
      // Accept both '-' and a leading '+' for readability.
      if (!token.empty() && token.front() == '+') token.remove_prefix(1);
      offsets.push_back(parse_int<int>(token, reader, "offset"));
    }
  }
  if (offsets.empty()) reader.fail("LCF file has no offsets");
  return build_from_lcf(offsets, repeats, std::move(name));
}

namespace {

std::string stem_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return in;
}

}  // namespace

BipartiteIncidenceGraph load_lcf(const std::string& path) {
  auto in = open_input(path);
  return parse_lcf(in, stem_of(path));
}

IncidenceFormat parse_incidence_format(const std::string& text) {
  if (text == "edge-list") return IncidenceFormat::edge_list;
  if (text == "adjacency-list") return IncidenceFormat::adjacency_list;
  throw ParameterError("unknown incidence format '" + text + "'");
}

BipartiteIncidenceGraph parse_incidence(std::istream& in, IncidenceFormat format, std::string name, bool transpose) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) reader.fail("empty incidence file");
  const auto header = split_tokens(line);

  std::size_t a_size = 0, b_size = 0;
  std::vector<std::vector<Vertex>> adjacency;
  auto check_range = [&](std::size_t a, std::size_t b) {
    if (a >= a_size) reader.fail("A-index " + std::to_string(a) + " out of range [0," + std::to_string(a_size) + ")");
    if (b >= b_size) reader.fail("B-index " + std::to_string(b) + " out of range [0," + std::to_string(b_size) + ")");
  };
  auto add_edge = [&](std::size_t a, Vertex b) {
    auto& row = adjacency[a];
    if (std::find(row.begin(), row.end(), b) != row.end()) {
      reader.fail("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    row.push_back(b);
  };

  if (format == IncidenceFormat::edge_list) {
    if (header.size() != 4 || header[0] != "bipartite") reader.fail("expected header 'bipartite <|A|> <|B|> <|E|>'");
    a_size = parse_int<std::size_t>(header[1], reader, "|A|");
    b_size = parse_int<std::size_t>(header[2], reader, "|B|");
    const auto e_size = parse_int<std::size_t>(header[3], reader, "|E|");
    adjacency.resize(a_size);
    std::size_t seen = 0;
    while (reader.next(line)) {
      const auto tokens = split_tokens(line);
      if (tokens.size() != 2) reader.fail("expected 'a b'");
      const auto a = parse_int<std::size_t>(tokens[0], reader, "A-index");
      const auto b = parse_int<std::size_t>(tokens[1], reader, "B-index");
      check_range(a, b);
      add_edge(a, static_cast<Vertex>(b));
      ++seen;
    }
    if (seen != e_size) {
      reader.fail("header declares " + std::to_string(e_size) + " edges, file has " + std::to_string(seen));
    }
  } else {
    if (header.size() != 3 || header[0] != "adjacency") reader.fail("expected header 'adjacency <|A|> <|B|>'");
    a_size = parse_int<std::size_t>(header[1], reader, "|A|");
    b_size = parse_int<std::size_t>(header[2], reader, "|B|");
    adjacency.resize(a_size);
    // Rows may be empty, so blank lines count here; read raw lines.
    std::size_t row = 0;
    std::string raw;
    std::size_t line_no = reader.line_number();
    while (std::getline(in, raw)) {
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (!raw.empty() && raw.front() == '#') continue;
      if (row == a_size) {
        if (split_tokens(raw).empty()) continue;
        throw ParseError("more adjacency rows than |A| = " + std::to_string(a_size), line_no);
      }
      for (auto token : split_tokens(raw)) {
        unsigned long long b = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), b);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
          throw ParseError("expected integer B-index, got '" + std::string(token) + "'", line_no);
        }
        if (b >= b_size) {
          throw ParseError("B-index " + std::to_string(b) + " out of range [0," + std::to_string(b_size) + ")",
                           line_no);
        }
        auto& r = adjacency[row];
        if (std::find(r.begin(), r.end(), static_cast<Vertex>(b)) != r.end()) {
          throw ParseError("duplicate edge " + std::to_string(row) + " " + std::to_string(b), line_no);
        }
        r.push_back(static_cast<Vertex>(b));
      }
      ++row;
    }
    if (row != a_size) {
      throw ParseError("expected " + std::to_string(a_size) + " adjacency rows, got " + std::to_string(row), line_no);
    }
  }
  BipartiteIncidenceGraph graph(std::move(name), a_size, b_size, std::move(adjacency));
  return transpose ? graph.transposed() : graph;
}

BipartiteIncidenceGraph load_incidence(const std::string& path, IncidenceFormat format, bool transpose) {
  auto in = open_input(path);
  return parse_incidence(in, format, stem_of(path), transpose);
}

void write_incidence(std::ostream& out, const BipartiteIncidenceGraph& graph, IncidenceFormat format) {
  if (format == IncidenceFormat::edge_list) {
    out << "bipartite " << graph.part_a_size() << ' ' << graph.part_b_size() << ' ' << graph.edge_count() << '\n';
    for (Vertex a = 0; a < graph.part_a_size(); ++a)
      for (Vertex b : graph.neighbors_of_a(a)) out << a << ' ' << b << '\n';
  } else {
    out << "adjacency " << graph.part_a_size() << ' ' << graph.part_b_size() << '\n';
    for (Vertex a = 0; a < graph.part_a_size(); ++a) {
      const auto row = graph.neighbors_of_a(a);
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << '\n';
    }
  }
}

std::optional<PolygonCounts> polygon_counts(unsigned s, unsigned t, unsigned gonality) {
  if (gonality < 2) return std::nullopt;
  if (gonality % 2 == 1) {
    // Odd gonality forces s == t; points and lines are both 1 + s + ... + s^(n-1).
    if (s != t) return std::nullopt;
    std::uint64_t total = 0, power = 1;
    for (unsigned i = 0; i < gonality; ++i, power *= s) total += power;
    return PolygonCounts{total, total};
  }
  // (1+s) * M points and (1+t) * M lines, M = 1 + st + ... + (st)^(n/2-1).
  std::uint64_t m = 0, power = 1;
  const std::uint64_t st = static_cast<std::uint64_t>(s) * t;
  for (unsigned i = 0; i < gonality / 2; ++i, power *= st) m += power;
  return PolygonCounts{(1 + static_cast<std::uint64_t>(s)) * m, (1 + static_cast<std::uint64_t>(t)) * m};
}

namespace {

std::string show(std::uint32_t value) { return value == kInfinite ? "infinite" : std::to_string(value); }

}  // namespace

PolygonCertificate compute_polygon_certificate(const BipartiteIncidenceGraph& graph, unsigned s, unsigned t,
                                               unsigned gonality, unsigned threads) {
  PolygonCertificate cert;
  cert.s = s;
  cert.t = t;
  cert.gonality = gonality;

  const SimpleGraph g = graph.to_simple_graph();
  cert.girth = girth(g, threads);
  cert.diameter = diameter(g, threads);

  bool regular = true;
  for (Vertex a = 0; a < graph.part_a_size() && regular; ++a) regular = graph.neighbors_of_a(a).size() == t + 1;
  for (Vertex b = 0; b < graph.part_b_size() && regular; ++b) regular = graph.neighbors_of_b(b).size() == s + 1;
  cert.degree_regular = regular;

  const auto counts = polygon_counts(s, t, gonality);
  cert.counts_match = counts && counts->points == graph.part_a_size() && counts->lines == graph.part_b_size();

  std::vector<std::string> reasons;
  if (cert.diameter == kInfinite) reasons.push_back("disconnected graph");
  if (cert.girth != 2 * gonality) reasons.push_back("girth " + show(cert.girth) + " ≠ " + std::to_string(2 * gonality));
  if (cert.diameter != kInfinite && cert.diameter != gonality) {
    reasons.push_back("diameter " + show(cert.diameter) + " ≠ " + std::to_string(gonality));
  }
  if (!regular) {
    reasons.push_back("not (" + std::to_string(t + 1) + "," + std::to_string(s + 1) + ")-biregular");
  }
  if (!cert.counts_match) {
    if (!counts) {
      reasons.push_back("no count identity for gonality " + std::to_string(gonality) + " with s=" +
                        std::to_string(s) + ", t=" + std::to_string(t));
    } else {
      reasons.push_back("|A|=" + std::to_string(graph.part_a_size()) + ", |B|=" + std::to_string(graph.part_b_size()) +
                        " but order (" + std::to_string(s) + "," + std::to_string(t) + ") needs " +
                        std::to_string(counts->points) + " and " + std::to_string(counts->lines));
    }
  }
  cert.valid = reasons.empty();
  for (std::size_t i = 0; i < reasons.size(); ++i) cert.reason += (i ? "; " : "") + reasons[i];
  return cert;
}

PolygonCertificate certify_polygon(BipartiteIncidenceGraph& graph, unsigned s, unsigned t, unsigned gonality,
                                   unsigned threads) {
  auto cert = compute_polygon_certificate(graph, s, t, gonality, threads);
  graph.attach_certificate(cert);
  return cert;
}

}  // namespace ramsey
