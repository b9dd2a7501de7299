#pragma once

#include <cstdint>
#include <random>

#include "field.hpp"

namespace lvx {

// Seeded generator with hand-rolled bounded draws so that sampled
// sequences are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  double uniform(double lo, double hi) {
    const double x = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * x;
  }

  // Inclusive bounds, rejection sampled.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 eng_;
};

// Connected vertex set grown from the origin by random adjacent additions.
std::vector<Vertex> random_connected_cluster(int dim, std::size_t size, Rng& rng);

// Uniform values in [lo, hi] on the interior (and boundary when
// with_boundary is set), drawn in lexicographic vertex order.
LatticeField random_field(std::shared_ptr<const Domain> domain, Rng& rng, double lo,
                          double hi, bool with_boundary);

}  // namespace lvx
