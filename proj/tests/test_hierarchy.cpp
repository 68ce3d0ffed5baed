#include "doctest.h"
#include "testutil.hpp"
#include "ultralip/hierarchy.hpp"
#include "ultralip/randgen.hpp"

using namespace ultralip;
using testutil::R;

namespace {

std::vector<std::string> level_labels(const PartitionChain& chain, long n) {
  std::vector<std::string> out;
  for (int c : chain.level(n)) out.push_back(chain.space->label(c));
  return out;
}

}  // namespace

TEST_CASE("build_chain on the fixture") {
  auto s = testutil::u4();
  PartitionChain chain = build_chain(s, R("1/2"));
  CHECK(chain.n_lo == -1);
  CHECK(chain.n_hi == 2);
  CHECK(level_labels(chain, -1) == std::vector<std::string>{"0"});
  CHECK(level_labels(chain, 0) == std::vector<std::string>{"0", "a", "c"});
  CHECK(level_labels(chain, 1) == std::vector<std::string>{"0", "a", "c"});
  CHECK(level_labels(chain, 2) == std::vector<std::string>{"0", "a", "b", "c"});
  CHECK_THROWS_WITH_AS(chain.level(3), doctest::Contains("LevelOutOfRange"), Error);
}

TEST_CASE("build_chain edge cases") {
  SUBCASE("single point") {
    auto s = make_space({"0"}, {{Rational(0)}});
    PartitionChain chain = build_chain(s, R("1/2"));
    CHECK(chain.n_lo == 0);
    CHECK(chain.n_hi == 0);
    CHECK(chain.level(0) == std::vector<int>{0});
  }
  SUBCASE("two points at distance one") {
    auto s = testutil::two_points(R("1"));
    PartitionChain chain = build_chain(s, R("1/2"));
    CHECK(chain.n_lo == -1);
    CHECK(chain.n_hi == 0);
    CHECK(chain.level(-1) == std::vector<int>{0});
    CHECK(chain.level(0) == std::vector<int>{0, 1});
  }
  SUBCASE("q out of range") {
    CHECK_THROWS_WITH_AS(build_chain(testutil::u4(), R("1")),
                         doctest::Contains("QOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(build_chain(testutil::u4(), R("0")),
                         doctest::Contains("QOutOfRange"), Error);
  }
  SUBCASE("needs an ultrametric space") {
    auto line = make_space({"0", "1", "2"},
                           {{R("0"), R("1"), R("2")},
                            {R("1"), R("0"), R("1")},
                            {R("2"), R("1"), R("0")}});
    CHECK_THROWS_WITH_AS(build_chain(line, R("1/2")),
                         doctest::Contains("NotUltrametric"), Error);
  }
}

TEST_CASE("phi on the fixture") {
  auto s = testutil::u4();
  PartitionChain chain = build_chain(s, R("1/2"));
  const int a = 1, b = 2, c = 3;
  CHECK(phi(chain, 0, b) == a);
  CHECK(phi(chain, 0, c) == c);  // centers stay put
  CHECK(phi(chain, -1, b) == 0);
  CHECK(phi(chain, 2, b) == b);
  CHECK_THROWS_WITH_AS(phi(chain, 5, b), doctest::Contains("LevelOutOfRange"), Error);
  CHECK(phi_clamped(chain, 5, b) == b);
  CHECK(phi_clamped(chain, -9, c) == 0);
}

TEST_CASE("trails on the fixture") {
  auto s = testutil::u4();
  PartitionChain chain = build_chain(s, R("1/2"));
  const int a = 1, b = 2, c = 3;
  SUBCASE("trail of b walks 0, a, b") {
    PhiTrail tr = trail(chain, b);
    CHECK(tr.change_levels == std::vector<long>{0, 2});
    CHECK(tr.points == std::vector<int>{0, a, b});
    CHECK(tr.m() == 2);
    CHECK(tr.level_of(0) == -1);
    CHECK(tr.level_of(2) == 2);
  }
  SUBCASE("base point trail is trivial") {
    PhiTrail tr = trail(chain, 0);
    CHECK(tr.change_levels.empty());
    CHECK(tr.points == std::vector<int>{0});
    CHECK(tr.level_of(0) == 0);
  }
  SUBCASE("trail of c") {
    PhiTrail tr = trail(chain, c);
    CHECK(tr.change_levels == std::vector<long>{0});
    CHECK(tr.points == std::vector<int>{0, c});
  }
}

TEST_CASE("geometric bound") {
  auto s = testutil::u4();
  PartitionChain chain = build_chain(s, R("1/2"));
  const int b = 2;
  SUBCASE("worked values at K = 0 and K = 1") {
    PhiTrail tr = trail(chain, b);
    GeometricBound g0 = geometric_bound(tr, 0);
    CHECK(g0.lhs == R("5/4"));
    CHECK(g0.rhs == R("4"));
    CHECK(g0.holds);
    GeometricBound g1 = geometric_bound(tr, 1);
    CHECK(g1.lhs == R("1/4"));
    CHECK(g1.rhs == R("1"));
    CHECK(g1.holds);
  }
  SUBCASE("one-step trails") {
    PhiTrail tr = trail(chain, 3);
    GeometricBound g = geometric_bound(tr, 0);
    CHECK(g.lhs == R("1"));
    CHECK(g.holds);
  }
  SUBCASE("index range") {
    PhiTrail tr = trail(chain, b);
    CHECK_THROWS_WITH_AS(geometric_bound(tr, 2), doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(geometric_bound(tr, -1), doctest::Contains("IndexOutOfRange"), Error);
  }
}

TEST_CASE("meet indices on the fixture") {
  auto s = testutil::u4();
  PartitionChain chain = build_chain(s, R("1/2"));
  const int a = 1, b = 2, c = 3;
  CHECK(meet_first(chain, a, b) == 1);
  // meet_second at 0: max{d(0,a), d(0,c)} = 1 <= d(a,c)/q = 2
  CHECK(meet_second(chain, a, c) == 0);
  CHECK_THROWS_WITH_AS(meet_first(chain, a, a), doctest::Contains("SamePoint"), Error);
  CHECK_THROWS_WITH_AS(meet_second(chain, b, b), doctest::Contains("SamePoint"), Error);
  SUBCASE("meet_first with the base") { CHECK(meet_first(chain, 0, c) == 0); }
}

TEST_CASE("tail-sum bound holds on random spaces") {
  // 200 seeded spaces up to 64 points, three ratios
  const std::vector<Rational> qs = {R("1/2"), R("1/3"), R("3/4")};
  for (int i = 0; i < 200; ++i) {
    auto s = gen_ultrametric(11000 + static_cast<std::uint64_t>(i), 2 + i % 63);
    const Rational& q = qs[static_cast<std::size_t>(i % 3)];
    PartitionChain chain = build_chain(s, q);
    for (int x = 1; x < s->size(); ++x) {
      PhiTrail tr = trail(chain, x);
      for (int K = 0; K < tr.m(); ++K) {
        GeometricBound g = geometric_bound(tr, K);
        REQUIRE(g.holds);
      }
    }
  }
}

TEST_CASE("chain invariants on random spaces") {
  for (int i = 0; i < 40; ++i) {
    auto s = gen_ultrametric(12000 + static_cast<std::uint64_t>(i), 2 + i % 9);
    PartitionChain chain = build_chain(s, R("2/3"));
    for (long n = chain.n_lo; n <= chain.n_hi; ++n) {
      const auto& centers = chain.level(n);
      const Rational radius = chain.q_pow(n);
      for (std::size_t p = 0; p < centers.size(); ++p)
        for (std::size_t r = p + 1; r < centers.size(); ++r)
          REQUIRE(s->dist(centers[p], centers[r]) >= radius);
      for (int x = 0; x < s->size(); ++x) {
        int covering = 0;
        for (int c : centers)
          if (s->dist(x, c) < radius) ++covering;
        REQUIRE(covering == 1);
      }
      if (n > chain.n_lo) {
        for (int c : chain.level(n - 1)) {
          bool kept = false;
          for (int cc : centers) kept = kept || (cc == c);
          REQUIRE(kept);
        }
      }
    }
    CHECK(chain.level(chain.n_lo) == std::vector<int>{0});
    CHECK(static_cast<int>(chain.level(chain.n_hi).size()) == s->size());
  }
}

TEST_CASE("trail prefix compatibility on random spaces") {
  for (int i = 0; i < 40; ++i) {
    auto s = gen_ultrametric(13000 + static_cast<std::uint64_t>(i), 3 + i % 8);
    PartitionChain chain = build_chain(s, R("1/2"));
    for (int x = 0; x < s->size(); ++x) {
      PhiTrail tr = trail(chain, x);
      for (int k = 0; k < tr.m(); ++k) {
        PhiTrail sub = trail(chain, tr.points[static_cast<std::size_t>(k)]);
        REQUIRE(sub.m() == k);
        for (int l = 0; l <= k; ++l)
          REQUIRE(sub.points[static_cast<std::size_t>(l)] ==
                  tr.points[static_cast<std::size_t>(l)]);
      }
    }
  }
}
