#pragma once

#include <cstdint>

namespace pbc {

// xoshiro256++ seeded through a splitmix64 chain. Streams for parallel paths
// come from XORing the path index into the seed before the scramble, so
// disjoint indices give uncorrelated streams without shared state.
//
// All derived draws are specified exactly so fixed-seed values are portable:
//  - uniform01 maps the top 53 bits onto [0, 1);
//  - normals use the Box-Muller cosine branch, two uniforms per draw;
//  - Poisson counts use CDF inversion for mean <= 10 and the PTRS
//    transformed-rejection sampler above.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  Rng(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t next_u64();
  double uniform01();                  // [0, 1)
  double normal();                     // standard normal
  std::uint64_t poisson(double mean);  // mean > 0

 private:
  std::uint64_t state_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace pbc
