#include "sampling.hpp"

#include <unordered_set>

namespace lvx {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw_invalid("Rng::uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::vector<Vertex> random_connected_cluster(int dim, std::size_t size, Rng& rng) {
  if (dim < 2) throw_invalid("random_connected_cluster: dimension must be >= 2");
  if (size < 1) throw_invalid("random_connected_cluster: size must be >= 1");
  std::vector<Vertex> verts{Vertex{std::vector<Coord>(dim, 0)}};
  std::unordered_set<Vertex, VertexHash> seen(verts.begin(), verts.end());
  while (verts.size() < size) {
    const auto& base =
        verts[static_cast<std::size_t>(rng.uniform_int(0, verts.size() - 1))];
    auto nbs = neighbors(base);
    const auto& pick =
        nbs[static_cast<std::size_t>(rng.uniform_int(0, nbs.size() - 1))];
    if (seen.insert(pick).second) verts.push_back(pick);
  }
  return verts;
}

LatticeField random_field(std::shared_ptr<const Domain> domain, Rng& rng, double lo,
                          double hi, bool with_boundary) {
  if (!domain) throw_invalid("random_field: null domain");
  std::vector<double> vals(domain->interior_count());
  for (double& v : vals) v = rng.uniform(lo, hi);
  if (!with_boundary) return LatticeField(std::move(domain), std::move(vals));
  std::vector<double> bvals(domain->boundary_count());
  for (double& v : bvals) v = rng.uniform(lo, hi);
  return LatticeField(std::move(domain), std::move(vals), std::move(bvals));
}

}  // namespace lvx
