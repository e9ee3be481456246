#include <doctest.h>

#include <random>

#include "mctsp/maxtsp.hpp"
#include "mctsp/oracle.hpp"
#include "support.hpp"

using namespace mctsp;

namespace {

Instance uniform(Direction d, std::size_t n, std::size_t k, Weight w) {
  Matrix m(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) m.at(static_cast<Vertex>(x), static_cast<Vertex>(y)) = w;
    }
  }
  return Instance(d, n, std::vector<Matrix>(k, m));
}

std::vector<Vertex> canonical(Direction d, std::vector<Vertex> order) {
  return HamiltonianCycle(d, std::move(order)).canonical().order();
}

bool has_edge(const ParetoSet<HamiltonianCycle>& s, Edge e) {
  for (const auto& entry : s) {
    if (entry.solution.contains(e)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("patch_paths") {
  CHECK(patch_paths({{2, 0, 1}}, Direction::directed, 3).order() == std::vector<Vertex>{2, 0, 1});
  CHECK(patch_paths({{0}, {1}, {2}, {3}}, Direction::directed, 4).order() ==
        std::vector<Vertex>{0, 1, 2, 3});
  CHECK(patch_paths({{2, 3}, {0, 1}}, Direction::directed, 4).order() ==
        std::vector<Vertex>{0, 1, 2, 3});
  CHECK_THROWS_AS(patch_paths({{0, 1}, {1, 2}}, Direction::directed, 3), ContractError);
  CHECK_THROWS_AS(patch_paths({{0, 1}}, Direction::directed, 3), ContractError);
}

TEST_CASE("mono base cases against brute force") {
  const Instance two(Direction::directed, 2, {Matrix(2, {0, 4, 6, 0})});
  CHECK(mono_maxatsp_half(two).weight(two) == WeightVector{10});
  const auto flat = uniform(Direction::directed, 6, 1, 3);
  CHECK(mono_maxatsp_half(flat).weight(flat) == WeightVector{18});
  const auto tri = uniform(Direction::undirected, 3, 1, 2);
  CHECK(mono_maxstsp_twothirds_style(tri).weight(tri) == WeightVector{6});

  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
    const auto d = test::random_instance(Direction::directed, n, 1, 50, rng);
    CHECK(2 * mono_maxatsp_half(d).weight(d)[0] >= test::brute_force_max_tour(d));
  }
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 6);
    const auto u = test::random_instance(Direction::undirected, n, 1, 50, rng);
    CHECK(3 * mono_maxstsp_twothirds_style(u).weight(u)[0] >= 2 * test::brute_force_max_tour(u));
  }

  // Two heavy triangles joined by light edges.
  Matrix m(6);
  for (Vertex x = 0; x < 6; ++x) {
    for (Vertex y = 0; y < 6; ++y) {
      if (x != y) m.at(x, y) = (x < 3) == (y < 3) ? 9 : 1;
    }
  }
  const Instance two_tri(Direction::undirected, 6, {m});
  CHECK(3 * mono_maxstsp_twothirds_style(two_tri).weight(two_tri)[0] >=
        2 * test::brute_force_max_tour(two_tri));
}

TEST_CASE("pattern legality") {
  CHECK(is_legal_pabcd({0, 1, 2, 3, 4, 5}));
  CHECK(pattern_paths({0, 1, 2, 3, 4, 5}) == std::vector<std::vector<Vertex>>{{2, 0, 3}, {4, 1, 5}});
  // b = c gives a -> u -> b -> v -> d.
  CHECK(is_legal_pabcd({0, 1, 2, 3, 3, 4}));
  CHECK(pattern_paths({0, 1, 2, 3, 3, 4}) == std::vector<std::vector<Vertex>>{{2, 0, 3, 1, 4}});
  CHECK_FALSE(is_legal_pabcd({0, 1, 2, 2, 3, 4}));
  // a = v and d = u: c -> v -> u -> b.
  CHECK(is_legal_pabcd({0, 1, 1, 2, 3, 0}));
  CHECK_FALSE(is_legal_pabcd({0, 0, 2, 3, 4, 5}));
  CHECK_FALSE(is_legal_pabcd({0, 1, 0, 2, 3, 4}));
  CHECK(pattern_is_full_tour({0, 1, 2, 1, 0, 2}, 3));
  CHECK_FALSE(pattern_is_full_tour({0, 1, 2, 3, 4, 5}, 6));
}

TEST_CASE("contraction") {
  std::mt19937_64 rng(22);
  const auto inst = test::random_instance(Direction::directed, 8, 2, 99, rng);
  const PabcdPattern p{0, 1, 2, 3, 4, 5};
  const auto c = contract_pabcd(inst, p);
  REQUIRE(c.instance.has_value());
  const auto& g = *c.instance;
  REQUIRE(g.n() == 4);
  CHECK(c.map.original_of == std::vector<Vertex>{6, 7, -1, -1});
  CHECK(c.map.merged == std::vector<std::vector<Vertex>>{{2, 0, 3}, {4, 1, 5}});
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(g.weight(i, 2, 0) == inst.weight(i, 3, 6));  // [ab] -> x leaves from b
    CHECK(g.weight(i, 0, 2) == inst.weight(i, 6, 2));  // x -> [ab] enters a
    CHECK(g.weight(i, 2, 3) == inst.weight(i, 3, 4));
    CHECK(g.weight(i, 3, 2) == inst.weight(i, 5, 2));
    CHECK(g.weight(i, 1, 0) == inst.weight(i, 7, 6));
  }

  const auto single = contract_pabcd(inst, {0, 1, 2, 3, 3, 4});
  REQUIRE(single.instance.has_value());
  CHECK(single.instance->n() == 4);  // 5, 6, 7 and the merged path

  const auto six = contract_pabcd(test::random_instance(Direction::directed, 6, 1, 9, rng), p);
  REQUIRE(six.instance.has_value());
  CHECK(six.instance->n() == 2);

  const auto five = contract_pabcd(test::random_instance(Direction::directed, 5, 1, 9, rng),
                                   {0, 1, 2, 3, 3, 4});
  CHECK_FALSE(five.instance.has_value());
  CHECK(five.map.contracted_n() == 1);

  CHECK_THROWS_AS(contract_pabcd(inst, {0, 1, 2, 2, 3, 4}), ContractError);
  CHECK_THROWS_AS(contract_pabcd(test::random_instance(Direction::undirected, 6, 1, 9, rng), p),
                  ContractError);
}

TEST_CASE("expansion") {
  std::mt19937_64 rng(23);
  const auto inst = test::random_instance(Direction::directed, 8, 1, 9, rng);
  const auto c = contract_pabcd(inst, {0, 1, 2, 3, 4, 5});
  // [ab] -> x -> [cd] -> y with x = 6, y = 7.
  const std::vector<Vertex> tour{2, 0, 3, 1};
  const auto with_pattern = expand_tour(tour, c.map, ExpandMode::with_pattern);
  CHECK(with_pattern.canonical().order() ==
        canonical(Direction::directed, {2, 0, 3, 6, 4, 1, 5, 7}));
  const auto with_uv = expand_tour(tour, c.map, ExpandMode::with_edge_uv);
  CHECK(with_uv.canonical().order() == canonical(Direction::directed, {2, 0, 1, 3, 6, 4, 5, 7}));
  CHECK(with_uv.contains({0, 1}));

  const auto s = contract_pabcd(inst, {0, 1, 2, 3, 3, 4});
  const std::vector<Vertex> st{0, 3, 1, 2};
  CHECK(expand_tour(st, s.map, ExpandMode::with_pattern).canonical().order() ==
        canonical(Direction::directed, {5, 2, 0, 3, 1, 4, 6, 7}));
  CHECK(expand_tour(st, s.map, ExpandMode::with_edge_uv).contains({0, 1}));

  CHECK_THROWS_AS(expand_tour(std::vector<Vertex>{0, 1, 2}, c.map, ExpandMode::with_pattern),
                  ContractError);
}

TEST_CASE("atsp_alg covers the exact curve") {
  std::mt19937_64 rng(24);
  AlgoConfig cfg;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 4);
    const std::size_t k = 1 + static_cast<std::size_t>(t % 2);
    const auto inst = test::random_instance(Direction::directed, n, k, 20, rng);
    const auto out = atsp_alg(inst, cfg);
    const auto exact = tour_pareto_exact(inst);
    CHECK(alpha_covers(approximation_ratio(Direction::directed, k, cfg.epsilon), out.vectors(),
                       exact.vectors()));
    for (const auto& e : out) CHECK(e.solution.weight(inst) == e.weight);
  }
  CHECK(atsp_alg(Instance(Direction::directed, 2, {Matrix(2, {0, 1, 1, 0})}), cfg).size() == 1);
  CHECK_THROWS_AS(atsp_alg(uniform(Direction::undirected, 4, 2, 1), cfg), ContractError);
}

TEST_CASE("stsp_alg covers the exact curve") {
  std::mt19937_64 rng(25);
  AlgoConfig cfg;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 5);
    const std::size_t k = 2 + static_cast<std::size_t>(t % 2);
    const auto inst = test::random_instance(Direction::undirected, n, k, 20, rng);
    const auto out = stsp_alg(inst, cfg);
    const auto exact = tour_pareto_exact(inst);
    CHECK(alpha_covers(approximation_ratio(Direction::undirected, k, cfg.epsilon), out.vectors(),
                       exact.vectors()));
  }
  CHECK_THROWS_AS(stsp_alg(uniform(Direction::undirected, 4, 1, 1), cfg), DimensionError);
  CHECK_THROWS_AS(stsp_alg(uniform(Direction::directed, 4, 2, 1), cfg), ContractError);
  CHECK_THROWS_AS(stsp_alg(uniform(Direction::undirected, 32, 3, 1), cfg), CapacityError);
}

TEST_CASE("a single heavy edge is kept") {
  AlgoConfig cfg;
  SUBCASE("directed, all of w2 on one arc") {
    auto ms = uniform(Direction::directed, 6, 2, 1).matrices();
    ms[1] = Matrix(6);
    ms[1].at(2, 5) = 100;
    const Instance inst(Direction::directed, 6, ms);
    const auto out = atsp_alg(inst, cfg);
    CHECK(has_edge(out, {2, 5}));
    CHECK(alpha_covers(approximation_ratio(Direction::directed, 2, cfg.epsilon), out.vectors(),
                       tour_pareto_exact(inst).vectors()));
  }
  SUBCASE("undirected, all of w3 on one edge") {
    auto ms = uniform(Direction::undirected, 6, 3, 1).matrices();
    ms[2] = Matrix(6);
    ms[2].at(1, 4) = ms[2].at(4, 1) = 100;
    const Instance inst(Direction::undirected, 6, ms);
    const auto out = stsp_alg(inst, cfg);
    CHECK(has_edge(out, {1, 4}));
    CHECK(alpha_covers(approximation_ratio(Direction::undirected, 3, cfg.epsilon), out.vectors(),
                       tour_pareto_exact(inst).vectors()));
  }
}

TEST_CASE("solve dispatches by direction") {
  std::mt19937_64 rng(26);
  AlgoConfig cfg;
  const auto u1 = test::random_instance(Direction::undirected, 6, 1, 9, rng);
  const auto s = solve(u1, cfg);
  REQUIRE(s.size() == 1);
  CHECK(s.entries().front().solution.order() == mono_maxstsp_twothirds_style(u1).order());
  const auto d2 = test::random_instance(Direction::directed, 5, 2, 9, rng);
  CHECK(solve(d2, cfg).vectors() == atsp_alg(d2, cfg).vectors());
}

TEST_CASE("approximation_ratio") {
  CHECK(approximation_ratio(Direction::directed, 2, Ratio(1, 10)) == Ratio(7, 30));
  CHECK(approximation_ratio(Direction::undirected, 2, Ratio(1, 10)) == Ratio(2, 5));
  CHECK(approximation_ratio(Direction::directed, 1, Ratio(1, 10)) == Ratio(1, 2));
  CHECK(approximation_ratio(Direction::undirected, 1, Ratio(1, 10)) == Ratio(2, 3));
  CHECK(approximation_ratio(Direction::directed, 9, Ratio(1, 2)) == Ratio(0));
}

TEST_CASE("amplify") {
  std::mt19937_64 rng(27);
  const auto inst = test::random_instance(Direction::directed, 6, 2, 20, rng);
  AlgoConfig cfg;
  auto run = [&](std::uint64_t seed) {
    auto c = cfg;
    c.rng_seed = seed;
    return atsp_alg(inst, c);
  };
  CHECK(amplify(run, 1, 3).vectors() == run(3).vectors());
  CHECK(amplify(run, 2, 3).vectors() == run(3).vectors());

  const auto wide = test::random_instance(Direction::undirected, 7, 3, 20, rng);
  AlgoConfig rcfg;
  rcfg.randomized_decomposition = true;
  auto rrun = [&](std::uint64_t seed) {
    auto c = rcfg;
    c.rng_seed = seed;
    return stsp_alg(wide, c);
  };
  const auto five = amplify(rrun, 5, 0).vectors();
  for (const auto& v : rrun(0).vectors()) {
    bool covered = false;
    for (const auto& w : five) covered |= w == v || dominates(w, v);
    CHECK(covered);
  }
  CHECK_THROWS_AS(amplify(run, 0, 0), ContractError);
}
