#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ultralip/space.hpp"

namespace ultralip {

// A countable pointed space given by an enumeration s_1, s_2, ... with
// s_1 = base and an exact distance oracle. Built-ins carry ground-truth
// metadata so depth-bounded searches can be tested against known answers.
class PresentedSpace {
 public:
  using LabelFn = std::function<std::string(long)>;
  using DistFn = std::function<Rational(long, long)>;

  PresentedSpace(std::string name, LabelFn labels, DistFn dist,
                 std::optional<bool> spherically_complete,
                 std::optional<bool> proper);

  const std::string& name() const { return name_; }
  std::string label(long k) const;       // k >= 1; s_1 = base
  Rational dist(long i, long j) const;   // symmetric by construction
  std::optional<bool> spherically_complete() const { return sc_; }
  std::optional<bool> proper() const { return proper_; }

 private:
  std::string name_;
  LabelFn labels_;
  DistFn dist_;
  std::optional<bool> sc_;
  std::optional<bool> proper_;
};

// Names: e1_not_sc, e2_omega_sc, e3_compact, discrete_n.
// Throws UnknownBuiltin.
PresentedSpace builtin_space(const std::string& name);

// Points s_1..s_n with oracle distances, fully validated.
// Metric-axiom failures surface as OracleViolation.
FiniteSpace truncate(const PresentedSpace& presented, long n);
SpacePtr truncate_shared(const PresentedSpace& presented, long n);

}  // namespace ultralip
