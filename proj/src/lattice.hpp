#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace lvx {

using Coord = std::int64_t;

// Point of the integer lattice Z^n, n >= 2.
struct Vertex {
  std::vector<Coord> coords;

  Vertex() = default;
  Vertex(std::initializer_list<Coord> cs) : coords(cs) {}
  explicit Vertex(std::vector<Coord> cs) : coords(std::move(cs)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  bool operator==(const Vertex&) const = default;
  auto operator<=>(const Vertex&) const = default;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const;
};

std::string to_string(const Vertex& v);

// l^1 (graph) distance. Throws invalid_input on dimension mismatch.
std::int64_t l1_distance(const Vertex& a, const Vertex& b);

// l^1 norm, i.e. distance to the origin.
std::int64_t l1_norm(const Vertex& v);

// The 2n lattice neighbours of v, ordered by coordinate index, minus
// direction before plus.
std::vector<Vertex> neighbors(const Vertex& v);

// True iff the vertex set is connected in the lattice adjacency.
// Throws invalid_input if empty or if dimensions are inconsistent.
bool is_connected(int dim, const std::vector<Vertex>& vertices);
bool is_connected(const std::vector<Vertex>& vertices);  // dim from first vertex

// All vertices outside `vertices` adjacent to some member, sorted.
std::vector<Vertex> vertex_boundary(int dim, const std::vector<Vertex>& vertices);

// A finite connected set of lattice vertices together with its vertex
// boundary and precomputed adjacency. Interior vertices and boundary
// vertices are each stored in lexicographic order; neighbour slots encode
// an interior index j as j and a boundary index b as -(b+1).
class Domain {
 public:
  // `vertices` need not be sorted; duplicates are rejected.
  static std::shared_ptr<const Domain> from_vertices(int dim, std::vector<Vertex> vertices);

  // Box {x : |x_i - c_i| <= half_width for all i}. half_width >= 1.
  static std::shared_ptr<const Domain> box(const Vertex& center, Coord half_width);

  int dim() const { return dim_; }
  std::size_t interior_count() const { return vertices_.size(); }
  std::size_t boundary_count() const { return boundary_.size(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Vertex>& boundary() const { return boundary_; }

  std::optional<std::size_t> interior_index(const Vertex& v) const;
  std::optional<std::size_t> boundary_index(const Vertex& v) const;
  bool contains(const Vertex& v) const { return interior_index(v).has_value(); }
  bool closure_contains(const Vertex& v) const {
    return contains(v) || boundary_index(v).has_value();
  }

  // The 2n neighbour slots of interior vertex i (see class comment).
  std::span<const std::int32_t> neighbor_slots(std::size_t i) const {
    return {slots_.data() + 2 * static_cast<std::size_t>(dim_) * i,
            2 * static_cast<std::size_t>(dim_)};
  }

  // Interior indices adjacent to boundary vertex b.
  std::span<const std::uint32_t> boundary_neighbors(std::size_t b) const {
    return {bnbr_.data() + boffset_[b], boffset_[b + 1] - boffset_[b]};
  }

  // Indices of interior vertices with at least one boundary neighbour.
  const std::vector<std::size_t>& inner_boundary_indices() const { return inner_; }

  bool connected() const { return connected_; }

 private:
  Domain() = default;

  int dim_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Vertex> boundary_;
  std::unordered_map<Vertex, std::uint32_t, VertexHash> vindex_;
  std::unordered_map<Vertex, std::uint32_t, VertexHash> bindex_;
  std::vector<std::int32_t> slots_;
  std::vector<std::size_t> boffset_;
  std::vector<std::uint32_t> bnbr_;
  std::vector<std::size_t> inner_;
  bool connected_ = false;
};

// Interior vertices adjacent to the boundary, in lexicographic order.
std::vector<Vertex> inner_boundary(const Domain& dom);

inline std::shared_ptr<const Domain> box_domain(const Vertex& center, Coord half_width) {
  return Domain::box(center, half_width);
}

}  // namespace lvx
