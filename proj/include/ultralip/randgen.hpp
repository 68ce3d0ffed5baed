#pragma once

#include <cstdint>
#include <random>

#include "ultralip/lipfn.hpp"
#include "ultralip/space.hpp"

namespace ultralip {

// Deterministic dendrogram generation: same seed, same tree, bit for bit.
struct RandomSpaceSpec {
  std::uint64_t seed = 0;
  int points = 1;
  std::vector<Rational> heights;  // descending level grid; halved when exhausted
  int branching = 3;              // max children per node
};

Dendrogram gen_space(const RandomSpaceSpec& spec);

// Convenience wrapper: default grid, validated space with labels 0..n-1.
SpacePtr gen_ultrametric(std::uint64_t seed, int points);

// Random base-normalized function with small rational values; optionally
// scaled into the unit ball.
LipFn gen_lipfn(SpacePtr space, std::mt19937_64& rng, bool unit_ball);

// Random sparse element with small rational coefficients.
FreeElement gen_element(SpacePtr space, std::mt19937_64& rng);

}  // namespace ultralip
