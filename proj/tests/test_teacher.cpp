#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "parlearn/errors.hpp"
#include "parlearn/teacher.hpp"

using namespace parlearn;
using oracle::h_star;

namespace {

// Every connected multigraph with exactly v vertices and e edges, one per
// isomorphism class, by listing all edge multisets.
std::vector<LabeledMultigraph> brute_cell(std::size_t v, std::size_t e) {
  std::vector<Edge> slots;
  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = a; b < v; ++b) slots.emplace_back(a, b);
  std::vector<LabeledMultigraph> classes;
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (chosen.size() == e) {
      LabeledMultigraph g(v, chosen);
      if (!g.connected()) return;
      for (const auto& c : classes)
        if (oracle::brute_isomorphic(c, g)) return;
      classes.push_back(g);
      return;
    }
    for (std::size_t s = from; s < slots.size(); ++s) {
      chosen.push_back(slots[s]);
      rec(s);
      chosen.pop_back();
    }
  };
  rec(0);
  return classes;
}

bool simple(const LabeledMultigraph& g) {
  std::set<Edge> seen;
  for (const auto& e : g.edges())
    if (e.loop() || !seen.insert(e).second) return false;
  return true;
}

}  // namespace

TEST_SUITE("teacher") {

TEST_CASE("value examples") {
  Teacher t(h_star());
  CHECK(t.value(graphs::single_vertex()) == 3);
  CHECK(t.value(graphs::loop_vertex()) == 1);
  CHECK(t.value(graphs::edge(2)) == 5);
  CHECK(t.counters().value_count == 3);
}

TEST_CASE("equivalent examples") {
  Teacher t(h_star());
  CHECK_FALSE(t.equivalent(h_star()));
  CHECK_FALSE(t.equivalent(h_star().permuted({1, 0})));
  const WeightedGraph h1({Rational(3)}, Matrix{{Rational(5, 9)}});
  const auto cx = t.equivalent(h1);
  REQUIRE(cx);
  CHECK(canonical_code(*cx) == canonical_code(graphs::loop_vertex()));
  CHECK(hom(*cx, h1) == Rational(5, 3));
  CHECK(hom(*cx, h_star()) == 1);
  CHECK(t.counters().equivalence_count == 3);
}

TEST_CASE("BoundExhausted when only larger graphs distinguish") {
  // Agrees with H* on K_1 and the loop vertex, differs on K_2.
  const WeightedGraph h({Rational(3)}, Matrix{{Rational(1, 3)}});
  CHECK(hom(graphs::edge(), h) != hom(graphs::edge(), h_star()));
  Teacher t(h_star(), TeacherConfig{1, 1, 0, 0});
  CHECK_THROWS_AS(t.equivalent(h), BoundExhausted);
  Teacher wider(h_star(), TeacherConfig{2, 1, 0, 0});
  CHECK(wider.equivalent(h));
}

TEST_CASE("theoretical bound") {
  CHECK(TeacherConfig::theoretical_bound(1) == 4);
  CHECK(TeacherConfig::theoretical_bound(2) == 640);
}

TEST_CASE("enumeration order starts with K_1 and the loop vertex") {
  TeacherConfig cfg;
  const auto first = enumerate_graphs(cfg, 3);
  REQUIRE(first.size() == 3);
  CHECK(canonical_code(first[0]) == canonical_code(graphs::single_vertex()));
  CHECK(canonical_code(first[1]) == canonical_code(graphs::loop_vertex()));
  CHECK((canonical_code(first[2]) == canonical_code(graphs::loop_vertex(2)) ||
         canonical_code(first[2]) == canonical_code(graphs::edge())));
}

TEST_CASE("enumeration cells match brute-force generation") {
  for (std::size_t v = 1; v <= 4; ++v) {
    for (std::size_t e = 0; e <= 4; ++e) {
      const auto& cell = graph_cell(v, e);
      const auto expected = brute_cell(v, e);
      CHECK_MESSAGE(cell.size() == expected.size(), "cell (" << v << "," << e << ")");
      for (const auto& g : expected) {
        bool found = false;
        for (const auto& c : cell) found = found || canonical_code(c) == canonical_code(g);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("six connected simple graphs on four vertices") {
  TeacherConfig cfg{4, 6, 0, 0};
  std::size_t count = 0;
  for_each_graph(cfg, [&](const LabeledMultigraph& g) {
    if (g.num_vertices() == 4 && simple(g)) ++count;
    return true;
  });
  CHECK(count == 6);
}

TEST_CASE("enumeration is duplicate-free and ordered") {
  const auto items = enumerate_graphs(TeacherConfig{7, 9, 0, 0}, 10000);
  CHECK(items.size() == 10000);
  std::set<CanonicalCode> codes;
  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(items[i].connected());
    codes.insert(canonical_code(items[i]));
    if (i > 0) {
      const auto& a = items[i - 1];
      const auto& b = items[i];
      const auto ka = std::make_tuple(a.num_vertices(), a.num_edges(), canonical_code(a));
      const auto kb = std::make_tuple(b.num_vertices(), b.num_edges(), canonical_code(b));
      CHECK(ka < kb);
    }
  }
  CHECK(codes.size() == items.size());
}

TEST_CASE("property: counterexamples are sound and deterministic, YES is spot-checked") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const auto target = oracle::random_weighted_graph(rng, 1 + i % 3);
    const auto h = i % 5 == 0 ? target.permuted([&] {
      Permutation s(target.size());
      std::iota(s.begin(), s.end(), 0);
      std::shuffle(s.begin(), s.end(), rng);
      return s;
    }())
                              : oracle::random_weighted_graph(rng, 1 + i % 2);
    Teacher t1(target, TeacherConfig{4, 5, 0, 0});
    Teacher t2(target, TeacherConfig{4, 5, 0, 0});
    std::optional<LabeledMultigraph> a, b;
    try {
      a = t1.equivalent(h);
      b = t2.equivalent(h);
    } catch (const BoundExhausted&) {
      continue;
    }
    CHECK(a.has_value() == b.has_value());
    if (a) {
      CHECK(*a == *b);
      CHECK(hom(*a, h) != hom(*a, target));
    } else {
      for (int s = 0; s < 200; ++s) {
        const auto g = oracle::random_multigraph(rng, 5, 6);
        CHECK(hom(g, h) == hom(g, target));
      }
    }
  }
}

TEST_CASE("property: value is multiplicative") {
  std::mt19937_64 rng(42);
  Teacher t(oracle::random_weighted_graph(rng, 3));
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_multigraph(rng, 4, 4), b = oracle::random_multigraph(rng, 4, 4);
    CHECK(t.value(disjoint_union(a, b)) == t.value(a) * t.value(b));
  }
}

}  // TEST_SUITE
