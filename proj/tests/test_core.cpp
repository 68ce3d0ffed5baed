#include <sstream>

#include "doctest.h"
#include "testutil.hpp"
#include "ultralip/presented.hpp"
#include "ultralip/randgen.hpp"

using namespace ultralip;
using testutil::R;

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(R("3/6")) == "1/2");
  CHECK(rat_str(R("-4/8")) == "-1/2");
  CHECK(rat_str(R("7")) == "7");
  CHECK(R("9/8") == Rational(9, 8));
  CHECK_THROWS_AS(R("1/0"), Error);
  CHECK_THROWS_AS(R("x"), Error);
  CHECK_THROWS_AS(R("1.5"), Error);
  CHECK(rat_pow(R("1/2"), -2) == 4);
  CHECK(rat_pow(R("2/3"), 3) == R("8/27"));
  CHECK(pow2_inv(3) == R("1/8"));
}

TEST_CASE("validate_space accepts the fixtures") {
  SUBCASE("one point") {
    auto s = make_space({"0"}, {{Rational(0)}});
    CHECK(s->size() == 1);
    CHECK(s->is_ultrametric());
  }
  SUBCASE("u4 is ultrametric") {
    auto s = testutil::u4();
    CHECK(s->is_ultrametric());
    CHECK_FALSE(s->ultrametric_witness().has_value());
    CHECK(s->dist(1, 2) == R("1/4"));
  }
  SUBCASE("euclidean three-point line is metric but not ultrametric") {
    auto s = make_space({"0", "1", "2"},
                        {{R("0"), R("1"), R("2")},
                         {R("1"), R("0"), R("1")},
                         {R("2"), R("1"), R("0")}});
    CHECK_FALSE(s->is_ultrametric());
    auto w = s->ultrametric_witness();
    REQUIRE(w.has_value());
    CHECK((*w)[0] == 0);
    CHECK((*w)[1] == 2);
    CHECK((*w)[2] == 1);
  }
}

TEST_CASE("validate_space rejects broken matrices") {
  auto d = [](const char* s) { return R(s); };
  SUBCASE("asymmetric") {
    CHECK_THROWS_WITH_AS(make_space({"0", "x"}, {{d("0"), d("1")}, {d("2"), d("0")}}),
                         doctest::Contains("AsymmetricMatrix"), Error);
  }
  SUBCASE("negative") {
    CHECK_THROWS_WITH_AS(make_space({"0", "x"}, {{d("0"), d("-1")}, {d("-1"), d("0")}}),
                         doctest::Contains("NegativeDistance"), Error);
  }
  SUBCASE("zero off the diagonal") {
    CHECK_THROWS_WITH_AS(make_space({"0", "x"}, {{d("0"), d("0")}, {d("0"), d("0")}}),
                         doctest::Contains("ZeroOffDiagonal"), Error);
  }
  SUBCASE("triangle violation names the triple") {
    CHECK_THROWS_WITH_AS(make_space({"0", "x", "y"},
                                    {{d("0"), d("1"), d("3")},
                                     {d("1"), d("0"), d("1")},
                                     {d("3"), d("1"), d("0")}}),
                         doctest::Contains("TriangleViolation"), Error);
  }
  SUBCASE("duplicate labels") {
    CHECK_THROWS_AS(make_space({"0", "0"}, {{d("0"), d("1")}, {d("1"), d("0")}}), Error);
  }
}

TEST_CASE("ball facts on the fixture") {
  auto s = testutil::u4();
  const int a = 1, b = 2, c = 3;
  SUBCASE("shared small ball") {
    auto rep = ultrametric_ball_facts(*s, a, b, 0, R("1/2"));
    CHECK(rep.item[2].applicable);
    CHECK(rep.item[2].holds);
    CHECK(s->open_ball(a, R("1/2")) == std::vector<int>{a, b});
  }
  SUBCASE("distinct side distances force the max") {
    auto rep = ultrametric_ball_facts(*s, a, 0, b, R("1"));
    CHECK(rep.item[0].applicable);  // d(a,b) = 1/4 != d(0,b) = 1
    CHECK(rep.item[0].holds);       // d(a,0) = 1 = max
    CHECK(rep.all_hold());
  }
  SUBCASE("degenerate tuple holds vacuously") {
    auto rep = ultrametric_ball_facts(*s, a, a, a, R("1/3"));
    CHECK(rep.all_hold());
  }
  SUBCASE("needs an ultrametric space") {
    auto line = make_space({"0", "1", "2"},
                           {{R("0"), R("1"), R("2")},
                            {R("1"), R("0"), R("1")},
                            {R("2"), R("1"), R("0")}});
    CHECK_THROWS_WITH_AS(ultrametric_ball_facts(*line, 0, 1, 2, R("1")),
                         doctest::Contains("NotUltrametric"), Error);
  }
  (void)c;
}

TEST_CASE("dendrogram round trips") {
  SUBCASE("u4 structure") {
    auto s = testutil::u4();
    Dendrogram d = to_dendrogram(*s);
    CHECK(d.node(d.root()).height == 1);
    CHECK(d.leaf_count() == 4);
    CHECK(d.leaf_labels() == std::vector<std::string>{"0", "a", "b", "c"});
    FiniteSpace back = from_dendrogram(d);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(back.dist(back.index_of(s->label(i)), back.index_of(s->label(j))) == s->dist(i, j));
  }
  SUBCASE("one point") {
    auto s = make_space({"0"}, {{Rational(0)}});
    Dendrogram d = to_dendrogram(*s);
    CHECK(d.leaf_count() == 1);
    CHECK(from_dendrogram(d).size() == 1);
  }
  SUBCASE("two points at 3/7") {
    auto s = testutil::two_points(R("3/7"));
    Dendrogram d = to_dendrogram(*s);
    CHECK(d.node(d.root()).height == R("3/7"));
    CHECK(d.node(d.root()).children.size() == 2);
  }
  SUBCASE("random spaces round trip exactly") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto s = gen_ultrametric(seed, 2 + static_cast<int>(seed % 9));
      FiniteSpace back = from_dendrogram(to_dendrogram(*s));
      for (int i = 0; i < s->size(); ++i)
        for (int j = 0; j < s->size(); ++j)
          CHECK(back.dist(back.index_of(s->label(i)), back.index_of(s->label(j))) ==
                s->dist(i, j));
    }
  }
  SUBCASE("matrix overload rejects non-ultrametrics") {
    std::vector<std::vector<Rational>> line = {{R("0"), R("1"), R("2")},
                                               {R("1"), R("0"), R("1")},
                                               {R("2"), R("1"), R("0")}};
    CHECK_THROWS_WITH_AS(to_dendrogram({"0", "1", "2"}, line),
                         doctest::Contains("NotUltrametric"), Error);
  }
}

TEST_CASE("space and dendrogram files") {
  SUBCASE("space file round trip is byte stable") {
    auto s = testutil::u4();
    std::ostringstream first;
    write_space(first, *s);
    std::istringstream in(first.str());
    FiniteSpace again = read_space(in);
    std::ostringstream second;
    write_space(second, again);
    CHECK(first.str() == second.str());
  }
  SUBCASE("dend file round trip") {
    auto s = testutil::u4();
    std::ostringstream text;
    write_dendrogram(text, to_dendrogram(*s));
    std::istringstream in(text.str());
    Dendrogram d = read_dendrogram(in);
    FiniteSpace back = from_dendrogram(d);
    CHECK(back.dist(back.index_of("a"), back.index_of("b")) == R("1/4"));
    CHECK(back.label(0) == "0");  // base leaf comes first
  }
  SUBCASE("loader keys on the header") {
    CHECK(parse_space_text("space 1\n0\n0\n")->size() == 1);
    CHECK(parse_space_text("dend\n( 1/2 : 0 x )\n")->dist(0, 1) == R("1/2"));
    CHECK_THROWS_WITH_AS(parse_space_text("nope\n"), doctest::Contains("ParseError"), Error);
  }
  SUBCASE("malformed files") {
    std::istringstream missing("space 2\n0 x\n0 1\n");
    CHECK_THROWS_AS(read_space(missing), Error);
    std::istringstream bad_dend("dend\n( 1 : 0\n");
    CHECK_THROWS_AS(read_dendrogram(bad_dend), Error);
  }
}

TEST_CASE("builtin presented spaces") {
  SUBCASE("e1 distances") {
    auto e1 = builtin_space("e1_not_sc");
    // labels 3 and 5 sit at enumeration indices 4 and 6
    CHECK(e1.dist(4, 6) == R("9/8"));
    CHECK(e1.label(1) == "0");
    CHECK(e1.spherically_complete() == false);
  }
  SUBCASE("e2 has omega at position 2") {
    auto e2 = builtin_space("e2_omega_sc");
    CHECK(e2.label(2) == "omega");
    // d(omega, 4): label 4 is s_6
    CHECK(e2.dist(2, 6) == R("17/16"));
    CHECK(e2.spherically_complete() == true);
    CHECK(e2.proper() == false);
  }
  SUBCASE("e3 truncation") {
    auto e3 = builtin_space("e3_compact");
    FiniteSpace t = truncate(e3, 3);
    CHECK(t.dist(0, 1) == 1);
    CHECK(t.dist(0, 2) == 1);
    CHECK(t.dist(1, 2) == R("1/2"));
    CHECK(t.is_ultrametric());
  }
  SUBCASE("discrete distances") {
    auto dn = builtin_space("discrete_n");
    CHECK(dn.dist(3, 8) == 1);  // labels 2 and 7
  }
  SUBCASE("unknown name") {
    CHECK_THROWS_WITH_AS(builtin_space("nope"), doctest::Contains("UnknownBuiltin"), Error);
  }
  SUBCASE("depth one truncation is the base point") {
    FiniteSpace t = truncate(builtin_space("e1_not_sc"), 1);
    CHECK(t.size() == 1);
    CHECK(t.label(0) == "0");
  }
  SUBCASE("e1 truncation matches the worked values") {
    FiniteSpace t = truncate(builtin_space("e1_not_sc"), 3);
    CHECK(t.dist(0, 1) == 2);
    CHECK(t.dist(0, 2) == 2);
    CHECK(t.dist(1, 2) == R("3/2"));
  }
  SUBCASE("oracle fuzz: strong triangle on random triples") {
    for (const char* name : {"e1_not_sc", "e2_omega_sc", "e3_compact", "discrete_n"}) {
      auto sp = builtin_space(name);
      std::mt19937_64 rng(99);
      for (int t = 0; t < 10000; ++t) {
        long i = 1 + static_cast<long>(rng() % 1000);
        long j = 1 + static_cast<long>(rng() % 1000);
        long k = 1 + static_cast<long>(rng() % 1000);
        if (i == j || j == k || i == k) continue;
        Rational ab = sp.dist(i, j), bc = sp.dist(j, k), ac = sp.dist(i, k);
        CHECK(ab <= (ac > bc ? ac : bc));
      }
    }
  }
}

TEST_CASE("clopen balls at unrealized radii") {
  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    auto s = gen_ultrametric(seed, 6);
    auto realized = s->realized_distances();
    std::vector<Rational> grid;
    grid.push_back(realized.front() / 2);
    for (std::size_t k = 0; k + 1 < realized.size(); ++k)
      grid.push_back((realized[k] + realized[k + 1]) / 2);
    grid.push_back(realized.back() + 1);
    for (int x = 0; x < s->size(); ++x) {
      for (const Rational& r : grid) {
        Rational below(0);
        for (const Rational& d : realized)
          if (d < r) below = d;
        CHECK(s->open_ball(x, r) == s->closed_ball(x, below));
      }
    }
  }
}
