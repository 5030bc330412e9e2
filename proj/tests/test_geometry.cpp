#include <doctest.h>

#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "ramsey/cycles.hpp"
#include "ramsey/error.hpp"
#include "ramsey/geometry.hpp"
#include "ramsey/pipeline.hpp"

using namespace ramsey;

namespace {

// Backtracking isomorphism test for small graphs.
bool isomorphic(const oracle::Dense& g, const oracle::Dense& h) {
  if (g.n != h.n) return false;
  std::vector<int> map(g.n, -1);
  std::vector<bool> used(h.n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t v) {
    if (v == g.n) return true;
    for (std::size_t w = 0; w < h.n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = g.adj[v][u] == h.adj[w][static_cast<std::size_t>(map[u])];
      if (!ok) continue;
      map[v] = static_cast<int>(w);
      used[w] = true;
      if (place(v + 1)) return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  return place(0);
}

bool degree_regular(const BipartiteIncidenceGraph& g, std::size_t a_degree, std::size_t b_degree) {
  for (Vertex a = 0; a < g.part_a_size(); ++a)
    if (g.neighbors_of_a(a).size() != a_degree) return false;
  for (Vertex b = 0; b < g.part_b_size(); ++b)
    if (g.neighbors_of_b(b).size() != b_degree) return false;
  return true;
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("PG(2,q) incidence graphs") {
  const auto pg2 = build_projective_plane_incidence(2);
  CHECK(pg2.part_a_size() == 7);
  CHECK(pg2.part_b_size() == 7);
  CHECK(degree_regular(pg2, 3, 3));
  CHECK(girth(pg2.to_simple_graph()) == 6);

  const auto heawood = load_base("heawood").graph;
  CHECK(isomorphic(oracle::dense(pg2.to_simple_graph()), oracle::dense(heawood.to_simple_graph())));

  const auto pg3 = build_projective_plane_incidence(3);
  CHECK(pg3.part_a_size() == 13);
  CHECK(pg3.part_b_size() == 13);
  CHECK(degree_regular(pg3, 4, 4));

  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto g = build_projective_plane_incidence(q);
    CAPTURE(q);
    CHECK(g.part_a_size() == q * q + q + 1);
    CHECK(degree_regular(g, q + 1, q + 1));
    CHECK(girth(g.to_simple_graph()) == 6);
  }
  CHECK_THROWS_AS(build_projective_plane_incidence(6), ParameterError);
  CHECK_THROWS_AS(build_projective_plane_incidence(10), ParameterError);
  CHECK_THROWS_AS(build_projective_plane_incidence(103), ParameterError);
}

TEST_CASE("girth agrees with the brute-force oracle on small base graphs") {
  for (const char* name : {"heawood", "tutte-coxeter", "pg2-3", "pg2-2"}) {
    const auto g = load_base(name).graph.to_simple_graph();
    CAPTURE(name);
    REQUIRE(g.vertex_count() <= 40);
    CHECK(girth(g) == oracle::girth(oracle::dense(g)));
    CHECK(diameter(g) == oracle::diameter(oracle::dense(g)));
  }
}

TEST_CASE("LCF construction") {
  const auto tc = load_base("tutte-coxeter").graph;
  const auto g = tc.to_simple_graph();
  CHECK(g.vertex_count() == 30);
  for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
  CHECK(girth(g) == 8);

  const auto cage = load_base("tutte12cage").graph;
  const auto c = cage.to_simple_graph();
  CHECK(c.vertex_count() == 126);
  for (Vertex v = 0; v < c.vertex_count(); ++v) CHECK(c.degree(v) == 3);
  CHECK(girth(c) == 12);

  // Chords coincide with cycle edges on 4 vertices.
  const int tiny[] = {5, -5};
  CHECK_THROWS_AS(build_from_lcf(tiny, 2), StructureError);
  // K4 = [2]^4 is not bipartite.
  const int k4[] = {2};
  CHECK_THROWS_AS(build_from_lcf(k4, 4), StructureError);
  // Chords that are not mutual.
  const int broken[] = {2, 3};
  CHECK_THROWS_AS(build_from_lcf(broken, 2), StructureError);

  std::istringstream text("# comment\nlcf 7\n5 -5\n");
  CHECK(parse_lcf(text, "x").to_simple_graph() == load_base("heawood").graph.to_simple_graph());
}

TEST_CASE("certify_polygon") {
  auto heawood = load_base("heawood").graph;
  auto cert = certify_polygon(heawood, 2, 2, 3);
  CHECK(cert.valid);
  CHECK(cert.girth == 6);
  CHECK(cert.diameter == 3);
  CHECK(cert.degree_regular);
  CHECK(cert.counts_match);
  REQUIRE(heawood.certificate());
  CHECK(heawood.certificate()->valid);

  auto bad = compute_polygon_certificate(heawood, 2, 2, 6);
  CHECK_FALSE(bad.valid);
  CHECK(bad.reason.find("girth 6 ≠ 12") != std::string::npos);

  auto tc = load_base("tutte-coxeter").graph;
  CHECK(certify_polygon(tc, 2, 2, 4).valid);

  auto cage = load_base("tutte12cage").graph;
  cert = certify_polygon(cage, 2, 2, 6);
  CHECK(cert.valid);
  CHECK(cert.girth == 12);
  CHECK(cert.diameter == 6);

  // Order (1,1) hexagon is the 12-cycle.
  std::vector<std::vector<Vertex>> ring(6);
  for (Vertex a = 0; a < 6; ++a) ring[a] = {a, static_cast<Vertex>((a + 1) % 6)};
  BipartiteIncidenceGraph c12("c12", 6, 6, ring);
  CHECK(compute_polygon_certificate(c12, 1, 1, 6).valid);

  BipartiteIncidenceGraph empty("empty", 3, 2, std::vector<std::vector<Vertex>>(3));
  const auto e = compute_polygon_certificate(empty, 1, 1, 3);
  CHECK_FALSE(e.valid);
  CHECK(e.reason.find("disconnected graph") != std::string::npos);

  // Certification is deterministic and leaves the graph untouched.
  CHECK(compute_polygon_certificate(cage, 2, 2, 6, 3).reason == compute_polygon_certificate(cage, 2, 2, 6, 1).reason);
  CHECK(cage.to_simple_graph() == load_base("tutte12cage").graph.to_simple_graph());
}

TEST_CASE("polygon counts") {
  // Generalized hexagon of order (q, q^3) at q = 2.
  const auto hex = polygon_counts(2, 8, 6);
  REQUIRE(hex);
  CHECK(hex->points == 819);   // (q+1)(q^8+q^4+1)
  CHECK(hex->lines == 2457);   // (q^3+1)(q^8+q^4+1)
  CHECK(polygon_counts(2, 2, 3)->points == 7);
  CHECK(polygon_counts(2, 2, 4)->points == 15);
  CHECK(polygon_counts(2, 2, 6)->points == 63);
  CHECK_FALSE(polygon_counts(2, 3, 3));
}

TEST_CASE("incidence files") {
  SUBCASE("edge list with hexagon sizes") {
    // (9,3)-biregular on 819 + 2457 vertices: b meets a = b + 273 j (mod 819).
    const auto path = temp_path("ramsey_hex_sizes.el");
    {
      std::ofstream out(path);
      out << "bipartite 819 2457 " << 2457 * 3 << '\n';
      for (unsigned b = 0; b < 2457; ++b)
        for (unsigned j = 0; j < 3; ++j) out << (b + 273 * j) % 819 << ' ' << b << '\n';
    }
    const auto g = load_incidence(path, IncidenceFormat::edge_list);
    CHECK(g.part_a_size() == 819);
    CHECK(g.part_b_size() == 2457);
    CHECK(degree_regular(g, 9, 3));
    CHECK_FALSE(g.certificate());
    const auto t = load_incidence(path, IncidenceFormat::edge_list, true);
    CHECK(t.part_a_size() == 2457);
    std::filesystem::remove(path);
  }
  SUBCASE("edgeless") {
    std::istringstream in("bipartite 4 5 0\n");
    const auto g = parse_incidence(in, IncidenceFormat::edge_list, "e");
    CHECK(g.edge_count() == 0);
    CHECK(g.part_b_size() == 5);
  }
  SUBCASE("errors carry line numbers") {
    std::istringstream dup("bipartite 2 2 3\n0 0\n0 1\n0 0\n");
    try {
      parse_incidence(dup, IncidenceFormat::edge_list, "d");
      FAIL("duplicate accepted");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
    std::istringstream range("bipartite 2 2 1\n\n0 7\n");
    try {
      parse_incidence(range, IncidenceFormat::edge_list, "r");
      FAIL("out of range accepted");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    std::istringstream count("bipartite 2 2 2\n0 1\n");
    CHECK_THROWS_AS(parse_incidence(count, IncidenceFormat::edge_list, "c"), ParseError);
    std::istringstream junk("bipartite 2 2 1\n0 x\n");
    CHECK_THROWS_AS(parse_incidence(junk, IncidenceFormat::edge_list, "j"), ParseError);
  }
  SUBCASE("round trips") {
    const auto cage = load_base("tutte12cage").graph;
    for (auto fmt : {IncidenceFormat::edge_list, IncidenceFormat::adjacency_list}) {
      std::stringstream io;
      write_incidence(io, cage, fmt);
      const auto back = parse_incidence(io, fmt, "cage");
      CHECK(back.adjacency() == cage.adjacency());
    }
    std::istringstream adj("adjacency 3 2\n0 1\n\n1\n");
    const auto g = parse_incidence(adj, IncidenceFormat::adjacency_list, "a");
    CHECK(g.neighbors_of_a(1).empty());
    CHECK(g.edge_count() == 3);
  }
}
