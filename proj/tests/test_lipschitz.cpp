#include "doctest.h"
#include "testutil.hpp"
#include "ultralip/freenorm.hpp"
#include "ultralip/lp.hpp"
#include "ultralip/mideal.hpp"
#include "ultralip/randgen.hpp"

using namespace ultralip;
using testutil::R;

TEST_CASE("lip_norm") {
  auto s = testutil::u4();
  SUBCASE("zero function") { CHECK(lip_norm_value(LipFn::zero(s)) == 0); }
  SUBCASE("fixture attains at (0,a) under index-order ties") {
    LipFn f = testutil::u4_fixture(s);
    NormReport rep = lip_norm(f);
    CHECK(rep.norm == 1);
    CHECK(*rep.argmax == std::make_pair(0, 1));
  }
  SUBCASE("single point") {
    auto one = make_space({"0"}, {{Rational(0)}});
    CHECK_THROWS_WITH_AS(lip_norm(LipFn::zero(one)), doctest::Contains("SinglePoint"), Error);
  }
  SUBCASE("werner function has norm one") {
    auto w = werner_space(4);
    CHECK(lip_norm_value(werner_function(w)) == 1);
  }
  SUBCASE("base value must vanish") {
    CHECK_THROWS_WITH_AS(LipFn::make(s, {R("1"), R("0"), R("0"), R("0")}),
                         doctest::Contains("BaseValueNonzero"), Error);
  }
}

TEST_CASE("mcshane extension") {
  auto s = testutil::u4();
  SUBCASE("full data reproduces itself") {
    LipFn f = testutil::u4_fixture(s);
    LipFn ext = mcshane_extend(s, {0, 1, 2, 3}, f.values());
    for (int i = 0; i < 4; ++i) CHECK(ext.value(i) == f.value(i));
  }
  SUBCASE("worked single-point datum") {
    LipFn ext = mcshane_extend(s, {1}, {R("1")});
    CHECK(ext.value(1) == 1);
    CHECK(ext.value(2) == 1);  // min(1 + 1/4, 0 + 1) = 1
    CHECK(ext.value(0) == 0);
  }
  SUBCASE("empty data gives zero") {
    LipFn ext = mcshane_extend(testutil::two_points(R("2")), {}, {});
    CHECK(lip_norm_value(ext) == 0);
  }
  SUBCASE("constant preservation on random spaces") {
    for (std::uint64_t seed = 700; seed < 720; ++seed) {
      auto sp = gen_ultrametric(seed, 6);
      std::mt19937_64 rng(seed);
      LipFn f = gen_lipfn(sp, rng, false);
      std::vector<int> A = {1, 3, 4};
      std::vector<Rational> vals = {f.value(1), f.value(3), f.value(4)};
      LipFn ext = mcshane_extend(sp, A, vals);
      Rational lip(0);
      std::vector<int> withbase = {0, 1, 3, 4};
      for (std::size_t a = 0; a < withbase.size(); ++a)
        for (std::size_t b = a + 1; b < withbase.size(); ++b) {
          Rational r = rat_abs(ext.value(withbase[a]) - ext.value(withbase[b])) /
                       sp->dist(withbase[a], withbase[b]);
          if (r > lip) lip = r;
        }
      CHECK(lip_norm_value(ext) == lip);
      for (std::size_t k = 0; k < A.size(); ++k) CHECK(ext.value(A[k]) == vals[k]);
    }
  }
}

TEST_CASE("pairing and molecules") {
  auto s = testutil::u4();
  const int a = 1, b = 2;
  SUBCASE("linearity on a scaled difference") {
    LipFn f = testutil::u4_fixture(s);
    FreeElement mu = (delta(s, a) - delta(s, b)).scaled(R("4"));
    CHECK(pairing(f, mu) == 4 * (f.value(a) - f.value(b)));
  }
  SUBCASE("zero element") {
    CHECK(pairing(testutil::u4_fixture(s), FreeElement(s)) == 0);
  }
  SUBCASE("fixture against the fine molecule") {
    CHECK(pairing(testutil::u4_fixture(s), molecule(s, a, b)) == 1);
  }
  SUBCASE("molecule coefficients") {
    FreeElement m = molecule(s, a, b);
    CHECK(m.coeff(a) == 4);
    CHECK(m.coeff(b) == -4);
    FreeElement swapped = molecule(s, b, a);
    CHECK((m + swapped).zero());
  }
  SUBCASE("base coefficient normalizes away") {
    FreeElement m = molecule(s, a, 0);
    CHECK(m.coeff(0) == 0);
    CHECK(m.coeff(a) == 1);
  }
  SUBCASE("same point rejected") {
    CHECK_THROWS_WITH_AS(molecule(s, a, a), doctest::Contains("SamePoint"), Error);
  }
  SUBCASE("space mismatch") {
    auto other = testutil::u4();
    CHECK_THROWS_WITH_AS(pairing(testutil::u4_fixture(s), delta(other, 1)),
                         doctest::Contains("SpaceMismatch"), Error);
  }
}

TEST_CASE("free norm engines on the fixture") {
  auto s = testutil::u4();
  const int a = 1, b = 2;
  SUBCASE("delta norms") {
    for (int x = 1; x < 4; ++x) {
      CHECK(free_norm_lp(delta(s, x)).value == s->dist(x, 0));
      CHECK(free_norm_tree(delta(s, x)) == s->dist(x, 0));
    }
  }
  SUBCASE("difference of close deltas") {
    FreeElement mu = delta(s, a) - delta(s, b);
    CHECK(free_norm_lp(mu).value == R("1/4"));
    CHECK(free_norm_tree(mu) == R("1/4"));
  }
  SUBCASE("sum of close deltas, with the hand-checkable dual") {
    FreeElement mu = delta(s, a) + delta(s, b);
    FreeNormResult res = free_norm_lp(mu);
    CHECK(res.value == 2);
    CHECK(free_norm_tree(mu) == 2);
    // f(a) = f(b) = 1 is feasible and attains 2
    LipFn dual = LipFn::make(s, {R("0"), R("1"), R("1"), R("1")});
    CHECK(lip_norm_value(dual) == 1);
    CHECK(pairing(dual, mu) == 2);
    // returned certificate is feasible and attains the value
    CHECK(lip_norm_value(res.certificate.optimal) <= 1);
    CHECK(pairing(res.certificate.optimal, mu) == res.value);
  }
  SUBCASE("zero element") {
    CHECK(free_norm_tree(FreeElement(s)) == 0);
    CHECK(free_norm_lp(FreeElement(s)).value == 0);
  }
  SUBCASE("tree engine needs an ultrametric space") {
    auto line = make_space({"0", "1", "2"},
                           {{R("0"), R("1"), R("2")},
                            {R("1"), R("0"), R("1")},
                            {R("2"), R("1"), R("0")}});
    CHECK_THROWS_WITH_AS(free_norm_tree(delta(line, 1)),
                         doctest::Contains("NotUltrametric"), Error);
    CHECK(free_norm_lp(delta(line, 2)).value == 2);
  }
}

TEST_CASE("free norm properties on random spaces") {
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    auto s = gen_ultrametric(seed, 2 + static_cast<int>(seed % 7));
    std::mt19937_64 rng(seed * 7);
    SUBCASE_IN_LOOP:;
    FreeElement mu = gen_element(s, rng);
    FreeElement nu = gen_element(s, rng);
    Rational nmu = free_norm_tree(mu);
    Rational nnu = free_norm_tree(nu);
    // engines agree
    CHECK(free_norm_lp(mu).value == nmu);
    // triangle and homogeneity
    CHECK(free_norm_tree(mu + nu) <= nmu + nnu);
    CHECK(free_norm_tree(mu.scaled(R("-3/2"))) == R("3/2") * nmu);
    // molecules are unit vectors, deltas are isometric
    for (int x = 0; x < s->size(); ++x)
      for (int y = x + 1; y < s->size(); ++y) {
        CHECK(free_norm_tree(molecule(s, x, y)) == 1);
        CHECK(free_norm_tree(delta(s, x) - delta(s, y)) == s->dist(x, y));
      }
  }
}

TEST_CASE("norm attainment") {
  auto s = testutil::u4();
  SUBCASE("fixture picks (a, 0)") {
    auto [x, y] = norm_attainment(testutil::u4_fixture(s));
    CHECK(s->label(x) == "a");
    CHECK(s->label(y) == "0");
  }
  SUBCASE("distance function attains at the farthest point") {
    std::vector<Rational> v;
    for (int i = 0; i < s->size(); ++i) v.push_back(s->dist(0, i));
    LipFn f = LipFn::make(s, v);
    auto [x, y] = norm_attainment(f);
    CHECK(y == 0);
    CHECK(s->dist(0, x) == s->max_dist_to_base());
  }
  SUBCASE("zero function attains nothing") {
    CHECK_THROWS_WITH_AS(norm_attainment(LipFn::zero(s)),
                         doctest::Contains("ZeroFunction"), Error);
  }
}

TEST_CASE("sup_combine") {
  auto s = testutil::u4();
  LipFn f = testutil::u4_fixture(s);
  SUBCASE("single function is itself") {
    LipFn g = sup_combine({f});
    for (int i = 0; i < 4; ++i) CHECK(g.value(i) == f.value(i));
  }
  SUBCASE("sup with the negation is the absolute value") {
    LipFn g = sup_combine({f, -f});
    for (int i = 0; i < 4; ++i) CHECK(g.value(i) == rat_abs(f.value(i)));
    CHECK(lip_norm_value(g) <= lip_norm_value(f));
  }
  SUBCASE("norm never exceeds the max of the inputs") {
    for (std::uint64_t seed = 40; seed < 50; ++seed) {
      auto sp = gen_ultrametric(seed, 5);
      std::mt19937_64 rng(seed);
      LipFn p = gen_lipfn(sp, rng, false);
      LipFn q = gen_lipfn(sp, rng, false);
      Rational bound = std::max(lip_norm_value(p), lip_norm_value(q));
      CHECK(lip_norm_value(sup_combine({p, q})) <= bound);
    }
  }
}

TEST_CASE("exact simplex basics") {
  SUBCASE("two-variable optimum") {
    lp::Problem p;
    p.num_vars = 2;
    p.objective = {R("3"), R("2")};
    p.add_row({R("1"), R("1")}, R("4"));
    p.add_row({R("1"), R("0")}, R("2"));
    p.add_row({R("0"), R("1")}, R("3"));
    lp::Solution sol = lp::maximize(p);
    REQUIRE(sol.status == lp::Status::Optimal);
    CHECK(sol.value == 10);  // x = 2, y = 2
  }
  SUBCASE("negative rhs forces phase one") {
    lp::Problem p;
    p.num_vars = 1;
    p.objective = {R("-1")};
    p.add_row({R("-1")}, R("-2"));  // x >= 2
    lp::Solution sol = lp::maximize(p);
    REQUIRE(sol.status == lp::Status::Optimal);
    CHECK(sol.value == -2);
    CHECK(sol.point[0] == 2);
  }
  SUBCASE("infeasible") {
    lp::Problem p;
    p.num_vars = 1;
    p.objective = {R("0")};
    p.add_row({R("1")}, R("1"));
    p.add_row({R("-1")}, R("-2"));  // x <= 1 and x >= 2
    CHECK(lp::maximize(p).status == lp::Status::Infeasible);
  }
  SUBCASE("unbounded") {
    lp::Problem p;
    p.num_vars = 1;
    p.objective = {R("1")};
    p.add_row({R("-1")}, R("0"));
    CHECK(lp::maximize(p).status == lp::Status::Unbounded);
  }
  SUBCASE("shortest paths solve difference constraints") {
    std::vector<std::vector<Rational>> w = {
        {R("0"), R("1"), R("5")},
        {R("1"), R("0"), R("1")},
        {R("5"), R("1"), R("0")},
    };
    auto sp = lp::all_pairs_shortest(w);
    CHECK(sp[0][2] == 2);
    CHECK(sp[0][1] == 1);
  }
}
