#include <set>

#include "atorsion/error.hpp"
#include "atorsion/padic.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace atorsion;

TEST_CASE("canonical bases") {
  // span{(1,2)} + 4Z^2 over Z_2
  const auto v = LatticeVertex::from_generators(2, 2, {{1, 2}}, 2);
  CHECK(v.basis() == std::vector<std::int64_t>{2, 1, 0, 2});
  CHECK(v.det_valuation() == 2);
  CHECK(v.type() == 0);
  // A homothetic copy lands on the same representative.
  CHECK(LatticeVertex::from_generators(2, 2, {{2, 4}}, 3) == v);
  CHECK(LatticeVertex::from_generators(2, 2, {{3, 6}, {5, 2}}, 2) ==
        LatticeVertex::from_generators(2, 2, {{1, 2}, {1, 2}, {5, 2}}, 2));
  const auto std3 = LatticeVertex::standard(3, 5);
  CHECK(std3.det_valuation() == 0);
  CHECK(LatticeVertex::from_generators(3, 5, {{5, 0, 0}, {0, 5, 0}, {0, 0, 5}}, 2) == std3);
}

TEST_CASE("neighbor counts are the number of proper subspaces") {
  for (auto [n, p] : {std::pair{1u, 2u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {1u, 5u}}) {
    mpz_class expect = 0;
    for (std::size_t d = 1; d <= n; ++d) expect += oracle::subspace_total(p, n + 1, d);
    CHECK(neighbor_count(n, p) == expect.get_ui());
    const auto around = neighbors(LatticeVertex::standard(n + 1, p));
    CHECK(around.size() == expect.get_ui());
    CHECK(std::set<LatticeVertex>(around.begin(), around.end()).size() == around.size());
  }
  CHECK(neighbor_count(2, 2) == 14);
  CHECK(neighbor_count(2, 3) == 26);
}

TEST_CASE("adjacency is symmetric and shifts types") {
  const auto start = LatticeVertex::standard(3, 3);
  for (const auto& w : neighbors(start)) {
    const auto back = neighbors(w);
    CHECK(std::find(back.begin(), back.end(), start) != back.end());
    CHECK(w.type() != start.type());
    std::map<unsigned, std::size_t> offsets;
    for (const auto& x : back) ++offsets[(x.type() + 3 - w.type()) % 3];
    CHECK(offsets[1] == 13);
    CHECK(offsets[2] == 13);
  }
}

TEST_CASE("radius one ball for n = 2, p = 2") {
  const auto b = ball(2, 2, 1);
  CHECK(b.vertices.size() == 15);
  CHECK(b.edges.size() == 35);  // 14 spokes and the 21 flags of the Fano plane
  CHECK(b.chambers.size() == 21);
  CHECK(b.type_tally() == std::vector<std::size_t>{1, 7, 7});
  const auto l = link(b, b.center);
  const auto verdict = oracle::projective_plane(l.incidence.points, l.incidence.lines, l.incidence.flags);
  CHECK(verdict.ok);
  CHECK(verdict.order == 2);
  const auto mine = check_projective_plane(l.incidence);
  CHECK(mine.ok);
  CHECK(mine.order == 2);
}

TEST_CASE("radius one balls") {
  const auto star = ball(1, 2, 1);
  CHECK(star.vertices.size() == 4);
  CHECK(star.edges.size() == 3);
  for (const auto& c : star.chambers) CHECK(c.size() == 2);
  const auto b3 = ball(2, 3, 1);
  CHECK(b3.vertices.size() == 27);
  CHECK(b3.chambers_at(b3.center).size() == 52);
  const auto l = link(b3, b3.center).incidence;
  CHECK(l.points == 13);
  CHECK(l.lines == 13);
  const auto verdict = oracle::projective_plane(l.points, l.lines, l.flags);
  CHECK(verdict.ok);
  CHECK(verdict.order == 3);
}

TEST_CASE("trees") {
  const auto b = ball(1, 2, 2);
  CHECK(b.vertices.size() == 10);
  CHECK(b.edges.size() == 9);
  CHECK(b.chambers.size() == 9);
  CHECK(link(b, b.center).incidence.points == 3);
}

TEST_CASE("interior vertices in the radius two ball") {
  const auto b = ball(2, 2, 2);
  CHECK(b.vertices.size() == 113);
  CHECK(b.edges.size() == 343);
  CHECK(b.chambers.size() == 231);
  std::size_t interior = 0;
  for (std::size_t v = 0; v < b.vertices.size(); ++v) {
    CHECK(b.distance[v] <= 2);
    if (!b.interior(v)) continue;
    ++interior;
    CHECK(b.adjacency[v].size() == 14);
    CHECK(b.chambers_at(v).size() == 21);
    const auto l = link(b, v);
    CHECK(oracle::projective_plane(l.incidence.points, l.incidence.lines, l.incidence.flags).ok);
  }
  CHECK(interior == 15);
  for (const auto& c : b.chambers) {
    std::set<unsigned> types;
    for (auto v : c) types.insert(b.types[v]);
    CHECK(types.size() == 3);
  }
}

TEST_CASE("guards and bad arguments") {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::not_found;
  };
  CHECK(kind([] { ball(2, 4, 1); }) == ErrorKind::range);
  CHECK(kind([] { ball(0, 2, 1); }) == ErrorKind::range);
  CHECK(kind([] { ball(4, 2, 1); }) == ErrorKind::size);
  CHECK(kind([] { ball(2, 3, 3, BallLimits{3, 3, 1000}); }) == ErrorKind::size);
  const auto b = ball(2, 2, 1);
  std::size_t edge_vertex = b.center == 0 ? 1 : 0;
  CHECK(kind([&] { link(b, edge_vertex); }) == ErrorKind::validation);
  CHECK(kind([&] { link(b, b.vertices.size()); }) == ErrorKind::dimension);
}

TEST_CASE("json export") {
  const auto b = ball(2, 2, 1);
  const auto j = nlohmann::json::parse(ball_to_json(b, true));
  for (const char* key : {"n", "p", "radius", "center", "vertex_count", "edge_count", "chamber_count", "type_tally",
                          "vertices", "edges", "chambers"})
    CHECK(j.contains(key));
  CHECK(j["vertex_count"] == 15);
  CHECK(j["vertices"].size() == 15);
  CHECK(j["vertices"][0].contains("basis"));
  const auto bare = nlohmann::json::parse(ball_to_json(b, false));
  CHECK_FALSE(bare["vertices"][0].contains("basis"));
  CHECK(ball_to_json(b, true) == ball_to_json(ball(2, 2, 1), true));
}
