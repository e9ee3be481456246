#include <doctest.h>

#include <random>

#include "mctsp/core.hpp"
#include "support.hpp"

using namespace mctsp;

TEST_CASE("dominates") {
  CHECK(dominates({3, 2}, {2, 2}));
  CHECK_FALSE(dominates({2, 2}, {2, 2}));
  CHECK_FALSE(dominates({3, 1}, {1, 3}));
  CHECK_THROWS_AS(dominates({1, 2}, {1, 2, 3}), DimensionError);
}

TEST_CASE("dominates is a strict partial order on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Weight> d(0, 3);
  auto draw = [&] { return WeightVector{d(rng), d(rng), d(rng)}; };
  for (int t = 0; t < 2000; ++t) {
    const auto a = draw(), b = draw(), c = draw();
    CHECK_FALSE(dominates(a, a));
    if (dominates(a, b)) CHECK_FALSE(dominates(b, a));
    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
  }
}

TEST_CASE("weight vectors reject negative components") {
  CHECK_THROWS_AS(WeightVector({1, -1}), ContractError);
  const WeightVector w{1, 2, 3};
  CHECK(w + WeightVector{1, 1, 1} == WeightVector{2, 3, 4});
  CHECK(w.without(1) == WeightVector{1, 3});
  CHECK(w.scaled(3) == WeightVector{3, 6, 9});
  CHECK(to_string(w) == "(1,2,3)");
}

TEST_CASE("at_least_fraction is exact") {
  CHECK(at_least_fraction(WeightVector{1, 1}, WeightVector{3, 3}, Ratio(1, 3)));
  CHECK_FALSE(at_least_fraction(WeightVector{1, 0}, WeightVector{3, 1}, Ratio(1, 3)));
  // 0.1 + 0.2 style drift cannot happen: 7/30 of 30 is exactly 7.
  CHECK(at_least_fraction(Weight{7}, Weight{30}, Ratio(7, 30)));
  CHECK_FALSE(at_least_fraction(Weight{6}, Weight{30}, Ratio(7, 30)));
  const Weight big = 1'000'000'000'000;
  CHECK(at_least_fraction(big / 3 + 1, big, Ratio(1, 3)));
  CHECK_FALSE(at_least_fraction(big / 3, big, Ratio(1, 3)));
}

TEST_CASE("pareto_insert") {
  ParetoSet<int> s(2);
  CHECK(s.insert(1, {3, 3}));
  CHECK(s.insert(2, {5, 5}));
  CHECK(s.vectors() == std::vector<WeightVector>{{5, 5}});
  CHECK_FALSE(s.insert(3, {3, 3}));
  CHECK(s.vectors() == std::vector<WeightVector>{{5, 5}});

  ParetoSet<int> t(2);
  t.insert(1, {1, 4});
  t.insert(2, {4, 1});
  CHECK(t.vectors() == std::vector<WeightVector>{{1, 4}, {4, 1}});

  SUBCASE("equal vectors keep the first solution") {
    ParetoSet<int> u(1);
    u.insert(7, {2});
    CHECK_FALSE(u.insert(8, {2}));
    REQUIRE(u.size() == 1);
    CHECK(u.entries().front().solution == 7);
  }
  SUBCASE("dimension mismatch") { CHECK_THROWS_AS(t.insert(3, {1, 2, 3}), DimensionError); }
}

TEST_CASE("pareto_insert is order-insensitive up to vectors") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Weight> d(0, 9);
  for (int round = 0; round < 50; ++round) {
    std::vector<WeightVector> stream;
    for (int j = 0; j < 30; ++j) stream.push_back({d(rng), d(rng)});
    ParetoSet<int> a(2), b(2);
    for (const auto& w : stream) a.insert(0, w);
    std::shuffle(stream.begin(), stream.end(), rng);
    for (const auto& w : stream) b.insert(0, w);
    CHECK(a.vectors() == b.vectors());
    for (const auto& x : a.vectors()) {
      for (const auto& y : a.vectors()) CHECK_FALSE(dominates(x, y));
    }
  }
}

TEST_CASE("alpha_covers") {
  const std::vector<WeightVector> ref{{4, 4}};
  CHECK(alpha_covers(Ratio(1, 2), std::vector<WeightVector>{{2, 2}}, ref));
  CHECK_FALSE(alpha_covers(Ratio(1, 2), std::vector<WeightVector>{{2, 1}}, ref));
  const std::vector<WeightVector> s{{1, 5}, {3, 3}, {6, 0}};
  CHECK(alpha_covers(Ratio(1), s, s));
  // Monotone: covered at 1/2 implies covered at every smaller ratio.
  const std::vector<WeightVector> cand{{2, 3}};
  CHECK(alpha_covers(Ratio(1, 2), cand, ref));
  CHECK(alpha_covers(Ratio(1, 3), cand, ref));
  CHECK_FALSE(alpha_covers(Ratio(2, 3), cand, ref));
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(Direction::directed, 1, {Matrix(1)}), StructuralError);
  CHECK_THROWS_AS(Instance(Direction::undirected, 2, {Matrix(2)}), StructuralError);
  CHECK_THROWS_AS(Instance(Direction::directed, 2, {}), DimensionError);
  CHECK_THROWS_AS(Instance(Direction::undirected, 3, {Matrix(3, {0, 1, 0, 2, 0, 0, 0, 0, 0})}),
                  StructuralError);
  CHECK_THROWS_AS(Instance(Direction::directed, 2, {Matrix(2, {0, -1, 0, 0})}), ContractError);
  const Instance d(Direction::directed, 2, {Matrix(2, {9, 5, 7, 9})});
  CHECK(d.weight(0, 0, 0) == 0);
  CHECK(d.edge_weight(1, 0) == WeightVector{7});
}

TEST_CASE("without_objective") {
  const Instance inst(Direction::directed, 2,
                      {Matrix(2, {0, 1, 2, 0}), Matrix(2, {0, 3, 4, 0})});
  const auto r = inst.without_objective(0);
  CHECK(r.k() == 1);
  CHECK(r.weight(0, 0, 1) == 3);
  CHECK_THROWS_AS(static_cast<void>(r.without_objective(0)), DimensionError);
}

TEST_CASE("cycle cover invariants") {
  CHECK_NOTHROW(CycleCover(Direction::directed, 4, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(CycleCover(Direction::undirected, 4, {{0, 1}, {2, 3}}), StructuralError);
  CHECK_THROWS_AS(CycleCover(Direction::directed, 3, {{0, 1}}), StructuralError);
  CHECK_THROWS_AS(CycleCover(Direction::directed, 3, {{0, 1, 2}, {1, 0}}), StructuralError);
  const CycleCover c(Direction::directed, 3, {{2, 0, 1}});
  CHECK(c.edges() == std::vector<Edge>{{2, 0}, {0, 1}, {1, 2}});
  CHECK(c.canonical().cycles() == std::vector<std::vector<Vertex>>{{0, 1, 2}});
  const CycleCover u(Direction::undirected, 3, {{0, 2, 1}});
  CHECK(u.canonical().cycles() == std::vector<std::vector<Vertex>>{{0, 1, 2}});
}

TEST_CASE("path collections") {
  const PathCollection p(Direction::directed, 5, {{3, 1}, {1, 4}});
  CHECK(p.paths() == std::vector<std::vector<Vertex>>{{0}, {3, 1, 4}, {2}});
  CHECK_THROWS_AS(PathCollection(Direction::directed, 3, {{0, 1}, {1, 2}, {2, 0}}),
                  StructuralError);
  CHECK_THROWS_AS(PathCollection(Direction::directed, 3, {{0, 1}, {0, 2}}), StructuralError);
  CHECK_THROWS_AS(PathCollection(Direction::undirected, 4, {{0, 1}, {0, 2}, {0, 3}}),
                  StructuralError);
  const PathCollection q(Direction::undirected, 4, {{2, 1}, {3, 2}});
  CHECK(q.paths() == std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}});
  const CycleCover c(Direction::undirected, 4, {{0, 1, 2, 3}});
  CHECK(q.is_subset_of(c));
  CHECK_FALSE(PathCollection(Direction::undirected, 4, {{0, 2}}).is_subset_of(c));
}

TEST_CASE("hamiltonian cycles") {
  CHECK_THROWS_AS(HamiltonianCycle(Direction::directed, {0, 1, 1}), StructuralError);
  const HamiltonianCycle t(Direction::undirected, {2, 0, 3, 1});
  CHECK(t.canonical().order() == std::vector<Vertex>{0, 2, 1, 3});
  CHECK(t.contains({3, 0}));
  CHECK_FALSE(t.contains({0, 1}));
  const HamiltonianCycle d(Direction::directed, {2, 0, 1});
  CHECK(d.contains({2, 0}));
  CHECK_FALSE(d.contains({0, 2}));
  CHECK(d.canonical().order() == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("ratio text") {
  CHECK(parse_ratio("1/10") == Ratio(1, 10));
  CHECK(parse_ratio("0.125") == Ratio(1, 8));
  CHECK(parse_ratio("3") == Ratio(3));
  CHECK(to_string(Ratio(7, 30)) == "7/30");
  CHECK(to_string(Ratio(4, 2)) == "2");
  CHECK_THROWS_AS(parse_ratio("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratio("1/0"), std::invalid_argument);
}
