#include "diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "calculus.hpp"

namespace lvx {

double decay_modulus(int dim, double lambda) {
  if (dim < 2) throw_invalid("decay_modulus: dimension must be >= 2");
  if (!(lambda > 0.0)) throw_invalid("decay_modulus: lambda must be positive");
  return std::log1p(lambda / (2.0 * dim));
}

double flux_identity_gap(const LatticeField& u, const VortexConfig& cfg, Model m) {
  // Validates that every vortex lies inside u's domain.
  const LatticeField g = vortex_source(cfg, u.domain_ptr());
  const auto dn = normal_derivative(u);
  double boundary_flux = 0.0;
  for (double v : dn) boundary_flux += v;
  double bulk = 0.0;
  for (double v : u.interior()) bulk += nonlinearity(m, cfg.lambda(), v);
  double mass = 0.0;
  for (double v : g.interior()) mass += v;
  return std::abs(boundary_flux - bulk - mass);
}

double flux_bulk_sum(const LatticeField& u, Model m) {
  double s = 0.0;
  for (double v : u.interior()) {
    const double ev = std::exp(v);
    s += m == Model::chern_simons ? ev * (1.0 - ev) : (1.0 - ev);
  }
  return s;
}

namespace {

// Hop distance from each interior vertex to the boundary (multi-source BFS).
std::vector<std::int64_t> boundary_layers(const Domain& dom) {
  std::vector<std::int64_t> dist(dom.interior_count(), -1);
  std::queue<std::size_t> q;
  for (std::size_t i : dom.inner_boundary_indices()) {
    dist[i] = 1;
    q.push(i);
  }
  while (!q.empty()) {
    std::size_t i = q.front();
    q.pop();
    for (std::int32_t s : dom.neighbor_slots(i))
      if (s >= 0) {
        auto j = static_cast<std::size_t>(s);
        if (dist[j] < 0) {
          dist[j] = dist[i] + 1;
          q.push(j);
        }
      }
  }
  return dist;
}

struct LineFit {
  double slope = 0.0;  // of y against x, negated by the caller as needed
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

}  // namespace

DecayFit fit_decay_rate(const LatticeField& u, const VortexConfig& cfg,
                        std::int64_t d_min, std::int64_t d_max, double value_floor) {
  const Domain& dom = u.domain();
  if (dom.dim() != cfg.dim())
    throw_invalid("fit_decay_rate: domain/configuration dimension mismatch");
  if (d_min < 0 || d_max < d_min)
    throw_invalid("fit_decay_rate: annulus [" + std::to_string(d_min) + ", " +
                  std::to_string(d_max) + "] is empty or negative");
  if (!(value_floor > 0.0)) throw_invalid("fit_decay_rate: value_floor must be positive");

  const auto layers = boundary_layers(dom);
  std::vector<double> xs, ys;
  std::vector<std::vector<double>> by_shell(static_cast<std::size_t>(d_max - d_min + 1));
  for (std::size_t i = 0; i < dom.interior_count(); ++i) {
    const std::int64_t d = l1_norm(dom.vertices()[i]);
    if (d < d_min || d > d_max) continue;
    if (layers[i] >= 0 && layers[i] < 3)
      throw error(errc::diagnostic,
                  "fit_decay_rate: annulus vertex " + to_string(dom.vertices()[i]) +
                      " is within 2 layers of the boundary; shrink the annulus or "
                      "enlarge the domain");
    const double a = std::abs(u.interior()[i]);
    if (a <= value_floor) continue;
    xs.push_back(static_cast<double>(d));
    ys.push_back(std::log(a));
    by_shell[static_cast<std::size_t>(d - d_min)].push_back(std::log(a));
  }
  if (xs.size() < 10)
    throw error(errc::diagnostic, "fit_decay_rate: only " + std::to_string(xs.size()) +
                                      " usable samples in the annulus (need 10); use a "
                                      "larger domain or a wider annulus");

  DecayFit fit;
  fit.m_theory = decay_modulus(cfg.dim(), cfg.lambda());
  fit.d_min = d_min;
  fit.d_max = d_max;
  fit.sample_count = xs.size();
  const LineFit line = least_squares(xs, ys);
  fit.slope = -line.slope;
  fit.intercept = line.intercept;
  fit.r_squared = line.r_squared;
  fit.epsilon_implied = 1.0 - fit.slope / fit.m_theory;

  std::vector<double> sx, sy;
  for (std::size_t k = 0; k < by_shell.size(); ++k) {
    if (by_shell[k].empty()) continue;
    double mean = 0.0;
    for (double v : by_shell[k]) mean += v;
    mean /= static_cast<double>(by_shell[k].size());
    sx.push_back(static_cast<double>(d_min + static_cast<std::int64_t>(k)));
    sy.push_back(mean);
  }
  fit.shell_count = sx.size();
  if (sx.size() >= 2) {
    const LineFit sl = least_squares(sx, sy);
    fit.slope_shell = -sl.slope;
    fit.r_squared_shell = sl.r_squared;
  }
  return fit;
}

namespace {

void check_barrier_args(int dim, double lambda, double epsilon, std::int64_t r_min,
                        std::int64_t r_max) {
  if (dim < 2) throw_invalid("barrier_check: dimension must be >= 2");
  if (!(lambda > 0.0)) throw_invalid("barrier_check: lambda must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw_invalid("barrier_check: epsilon must lie in (0,1), got " +
                  std::to_string(epsilon));
  if (r_min < 1 || r_max < r_min)
    throw_invalid("barrier_check: radius range must satisfy 1 <= r_min <= r_max");
}

}  // namespace

BarrierReport barrier_check(int dim, double lambda, double epsilon, std::int64_t r_min,
                            std::int64_t r_max) {
  check_barrier_args(dim, lambda, epsilon, r_min, r_max);
  const double n = dim;
  const double m = decay_modulus(dim, lambda);
  const double q = std::exp(-m * (1.0 - epsilon));
  BarrierReport rep;
  rep.m = m;
  rep.c3 = 2.0 * n * (std::pow(1.0 + lambda / (2.0 * n), 1.0 - epsilon) - 1.0);
  bool first = true;
  for (std::int64_t t = r_min; t <= r_max; ++t) {
    const double qt = std::pow(q, static_cast<double>(t));
    // z zero coordinates: n-z coordinates step both down (t-1) and up (t+1),
    // z coordinates step up twice. A vertex at distance t needs at least
    // n-z <= t nonzero coordinates.
    for (int z = 0; z < dim; ++z) {
      if (dim - z > t) continue;
      const double margin =
          qt * (2.0 * n + rep.c3 - (n - z) * (q + 1.0 / q) - 2.0 * z * q);
      ++rep.pairs_checked;
      if (first || margin < rep.min_margin) {
        rep.min_margin = margin;
        rep.argmin_distance = t;
        rep.argmin_zero_coords = z;
        first = false;
      }
    }
  }
  return rep;
}

double barrier_margin_at(int dim, double lambda, double epsilon, const Vertex& x) {
  if (x.dim() != dim) throw_invalid("barrier_margin_at: vertex dimension mismatch");
  const std::int64_t t = l1_norm(x);
  check_barrier_args(dim, lambda, epsilon, std::max<std::int64_t>(t, 1), t);
  const double m = decay_modulus(dim, lambda);
  const double c3 =
      2.0 * dim * (std::pow(1.0 + lambda / (2.0 * dim), 1.0 - epsilon) - 1.0);
  auto h = [&](std::int64_t d) { return -std::exp(-m * (1.0 - epsilon) * d); };
  double lap = 0.0;
  for (const Vertex& y : neighbors(x)) lap += h(l1_norm(y)) - h(t);
  return lap - c3 * h(t);
}

double gns_ratio(const LatticeField& v) {
  // Null extension: boundary values are zero regardless of stored data.
  LatticeField w(v.domain_ptr(),
                 std::vector<double>(v.interior().begin(), v.interior().end()));
  double l2sq = 0.0, l4_4 = 0.0;
  for (double x : w.interior()) {
    l2sq += x * x;
    l4_4 += x * x * x * x;
  }
  if (l2sq == 0.0) throw_invalid("gns_ratio: field is identically zero");
  // Norm over ordered neighbour pairs = twice the Dirichlet form of the
  // null extension.
  const double d12sq = 2.0 * dirichlet_form(w, w);
  return std::pow(l4_4, 0.25) / (std::pow(d12sq, 0.25) * std::pow(l2sq, 0.25));
}

double isoperimetric_ratio(int dim, const std::vector<Vertex>& vertices) {
  const auto boundary = vertex_boundary(dim, vertices);
  const auto size = static_cast<double>(vertices.size());
  const double denom = dim == 2
                           ? std::sqrt(size)
                           : std::pow(size, (dim - 1.0) / static_cast<double>(dim));
  return static_cast<double>(boundary.size()) / denom;
}

ProbeResult max_principle_probe(const LatticeField& f, const LatticeField& v,
                                double tol) {
  if (!same_domain(f, v)) throw_invalid("max_principle_probe: domain mismatch");
  const Domain& dom = f.domain();
  ProbeResult res;

  for (std::size_t i = 0; i < dom.interior_count(); ++i)
    if (!(f.interior()[i] > 0.0)) {
      res.detail = "hypothesis failed: f <= 0 at interior vertex " +
                   to_string(dom.vertices()[i]);
      return res;
    }
  for (std::size_t b = 0; b < dom.boundary_count(); ++b)
    if (!(f.boundary_value(b) > 0.0)) {
      res.detail =
          "hypothesis failed: f <= 0 at boundary vertex " + to_string(dom.boundary()[b]);
      return res;
    }
  for (std::size_t b = 0; b < dom.boundary_count(); ++b)
    if (v.boundary_value(b) > tol) {
      res.detail =
          "hypothesis failed: v > 0 at boundary vertex " + to_string(dom.boundary()[b]);
      return res;
    }
  const auto lap = laplacian(v);
  for (std::size_t i = 0; i < dom.interior_count(); ++i)
    if (lap[i] - f.interior()[i] * v.interior()[i] < -tol) {
      res.detail = "hypothesis failed: (Delta - f)v < 0 at interior vertex " +
                   to_string(dom.vertices()[i]);
      return res;
    }

  double mx = v.interior().empty() ? 0.0 : v.interior()[0];
  for (double x : v.interior()) mx = std::max(mx, x);
  res.max_interior_value = mx;
  res.outcome = mx <= tol ? ProbeOutcome::pass : ProbeOutcome::fail;
  if (res.outcome == ProbeOutcome::fail)
    res.detail = "conclusion violated: max interior v = " + std::to_string(mx);
  return res;
}

}  // namespace lvx
