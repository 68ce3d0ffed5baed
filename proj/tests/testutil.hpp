#pragma once

#include <string>
#include <vector>

#include "ultralip/lipfn.hpp"
#include "ultralip/rational.hpp"
#include "ultralip/space.hpp"

namespace ultralip::testutil {

inline Rational R(const std::string& s) { return parse_rational(s); }

// Four-point ultrametric fixture: base 0, a and b a quarter apart, all other
// distances 1.
inline SpacePtr u4() {
  Rational q4(1, 4), one(1), zero(0);
  std::vector<std::vector<Rational>> d = {
      {zero, one, one, one},
      {one, zero, q4, one},
      {one, q4, zero, one},
      {one, one, one, zero},
  };
  return make_space({"0", "a", "b", "c"}, d);
}

// The fixture function (0, 1, 3/4, 1) on u4.
inline LipFn u4_fixture(SpacePtr space) {
  return LipFn::make(std::move(space), {Rational(0), Rational(1), Rational(3, 4), Rational(1)});
}

inline SpacePtr two_points(const Rational& d) {
  return make_space({"0", "x"}, {{Rational(0), d}, {d, Rational(0)}});
}

}  // namespace ultralip::testutil
