#include "lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace lvx {

std::size_t VertexHash::operator()(const Vertex& v) const {
  // FNV-1a over the coordinate bytes.
  std::uint64_t h = 1469598103934665603ull;
  for (Coord c : v.coords) {
    auto u = static_cast<std::uint64_t>(c);
    for (int i = 0; i < 8; ++i) {
      h ^= (u >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Vertex& v) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < v.dim(); ++i) {
    if (i) os << ',';
    os << v.coords[i];
  }
  os << ')';
  return os.str();
}

std::int64_t l1_distance(const Vertex& a, const Vertex& b) {
  if (a.dim() != b.dim())
    throw_invalid("l1_distance: dimension mismatch (" + std::to_string(a.dim()) +
                  " vs " + std::to_string(b.dim()) + ")");
  std::int64_t d = 0;
  for (int i = 0; i < a.dim(); ++i) {
    Coord diff = a.coords[i] - b.coords[i];
    d += diff < 0 ? -diff : diff;
  }
  return d;
}

std::int64_t l1_norm(const Vertex& v) {
  std::int64_t d = 0;
  for (Coord c : v.coords) d += c < 0 ? -c : c;
  return d;
}

std::vector<Vertex> neighbors(const Vertex& v) {
  if (v.dim() < 2)
    throw_invalid("neighbors: lattice dimension must be >= 2, got " +
                  std::to_string(v.dim()));
  std::vector<Vertex> out;
  out.reserve(2 * static_cast<std::size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) {
    Vertex m = v;
    m.coords[i] -= 1;
    out.push_back(std::move(m));
    Vertex p = v;
    p.coords[i] += 1;
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

void check_vertex_dims(int dim, const std::vector<Vertex>& vertices, const char* who) {
  if (dim < 2)
    throw_invalid(std::string(who) + ": lattice dimension must be >= 2, got " +
                  std::to_string(dim));
  if (vertices.empty()) throw_invalid(std::string(who) + ": vertex set is empty");
  for (const Vertex& v : vertices)
    if (v.dim() != dim)
      throw_invalid(std::string(who) + ": vertex " + to_string(v) +
                    " has dimension " + std::to_string(v.dim()) + ", expected " +
                    std::to_string(dim));
}

}  // namespace

bool is_connected(const std::vector<Vertex>& vertices) {
  if (vertices.empty()) throw_invalid("is_connected: vertex set is empty");
  return is_connected(vertices.front().dim(), vertices);
}

bool is_connected(int dim, const std::vector<Vertex>& vertices) {
  check_vertex_dims(dim, vertices, "is_connected");
  std::unordered_map<Vertex, std::uint32_t, VertexHash> index;
  index.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto [it, fresh] = index.emplace(vertices[i], static_cast<std::uint32_t>(i));
    if (!fresh)
      throw_invalid("is_connected: duplicate vertex " + to_string(vertices[i]));
  }
  std::vector<char> seen(vertices.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    std::uint32_t i = stack.back();
    stack.pop_back();
    for (const Vertex& nb : neighbors(vertices[i])) {
      auto it = index.find(nb);
      if (it != index.end() && !seen[it->second]) {
        seen[it->second] = 1;
        ++visited;
        stack.push_back(it->second);
      }
    }
  }
  return visited == vertices.size();
}

std::vector<Vertex> vertex_boundary(int dim, const std::vector<Vertex>& vertices) {
  check_vertex_dims(dim, vertices, "vertex_boundary");
  std::unordered_map<Vertex, std::uint32_t, VertexHash> inside;
  inside.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    inside.emplace(vertices[i], static_cast<std::uint32_t>(i));
  std::vector<Vertex> out;
  for (const Vertex& v : vertices)
    for (Vertex& nb : neighbors(v))
      if (!inside.count(nb)) out.push_back(std::move(nb));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::shared_ptr<const Domain> Domain::from_vertices(int dim, std::vector<Vertex> vertices) {
  check_vertex_dims(dim, vertices, "Domain");
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      throw_invalid("Domain: duplicate vertex " + to_string(vertices[i]));

  auto dom = std::shared_ptr<Domain>(new Domain());
  dom->dim_ = dim;
  dom->vertices_ = std::move(vertices);
  const std::size_t n = dom->vertices_.size();
  dom->vindex_.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    dom->vindex_.emplace(dom->vertices_[i], static_cast<std::uint32_t>(i));

  dom->boundary_ = vertex_boundary(dim, dom->vertices_);
  dom->bindex_.reserve(dom->boundary_.size());
  for (std::size_t b = 0; b < dom->boundary_.size(); ++b)
    dom->bindex_.emplace(dom->boundary_[b], static_cast<std::uint32_t>(b));

  const std::size_t deg = 2 * static_cast<std::size_t>(dim);
  dom->slots_.resize(n * deg);
  std::vector<std::vector<std::uint32_t>> bn(dom->boundary_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto nbs = neighbors(dom->vertices_[i]);
    bool touches_boundary = false;
    for (std::size_t k = 0; k < deg; ++k) {
      auto it = dom->vindex_.find(nbs[k]);
      if (it != dom->vindex_.end()) {
        dom->slots_[i * deg + k] = static_cast<std::int32_t>(it->second);
      } else {
        std::uint32_t b = dom->bindex_.at(nbs[k]);
        dom->slots_[i * deg + k] = -static_cast<std::int32_t>(b) - 1;
        bn[b].push_back(static_cast<std::uint32_t>(i));
        touches_boundary = true;
      }
    }
    if (touches_boundary) dom->inner_.push_back(i);
  }

  dom->boffset_.resize(dom->boundary_.size() + 1, 0);
  for (std::size_t b = 0; b < bn.size(); ++b)
    dom->boffset_[b + 1] = dom->boffset_[b] + bn[b].size();
  dom->bnbr_.reserve(dom->boffset_.back());
  for (auto& row : bn)
    for (std::uint32_t i : row) dom->bnbr_.push_back(i);

  dom->connected_ = is_connected(dim, dom->vertices_);
  return dom;
}

std::shared_ptr<const Domain> Domain::box(const Vertex& center, Coord half_width) {
  if (center.dim() < 2)
    throw_invalid("Domain::box: lattice dimension must be >= 2, got " +
                  std::to_string(center.dim()));
  if (half_width < 1)
    throw_invalid("Domain::box: half_width must be >= 1, got " +
                  std::to_string(half_width));
  const int dim = center.dim();
  const std::size_t side = static_cast<std::size_t>(2 * half_width + 1);
  std::size_t count = 1;
  for (int i = 0; i < dim; ++i) {
    if (count > (std::size_t(1) << 40) / side)
      throw_invalid("Domain::box: box too large");
    count *= side;
  }
  std::vector<Vertex> verts;
  verts.reserve(count);
  std::vector<Coord> offs(dim, -half_width);
  while (true) {
    Vertex v = center;
    for (int i = 0; i < dim; ++i) v.coords[i] += offs[i];
    verts.push_back(std::move(v));
    int i = dim - 1;
    while (i >= 0 && offs[i] == half_width) {
      offs[i] = -half_width;
      --i;
    }
    if (i < 0) break;
    ++offs[i];
  }
  return from_vertices(dim, std::move(verts));
}

std::optional<std::size_t> Domain::interior_index(const Vertex& v) const {
  if (v.dim() != dim_) return std::nullopt;
  auto it = vindex_.find(v);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Domain::boundary_index(const Vertex& v) const {
  if (v.dim() != dim_) return std::nullopt;
  auto it = bindex_.find(v);
  if (it == bindex_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> inner_boundary(const Domain& dom) {
  std::vector<Vertex> out;
  out.reserve(dom.inner_boundary_indices().size());
  for (std::size_t i : dom.inner_boundary_indices()) out.push_back(dom.vertices()[i]);
  return out;
}

}  // namespace lvx
