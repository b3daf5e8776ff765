#include "feasibility.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "rng.hpp"
#include "uncertainty.hpp"

namespace guf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int sweep_threads() {
  if (const char* env = std::getenv("UNC_THREADS")) {
    long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<int>(std::min<long>(parsed, 64));
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

// Results land in caller-owned slots indexed by the loop variable, so the
// outcome is independent of the thread count.
void parallel_for(int count, const std::function<void(int)>& body) {
  int threads = std::min(sweep_threads(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Minimizes <g, S g> at fixed <g, diag(lam) g> = x over unit vectors, by
// bisecting the pencil parameter of S - alpha * diag(lam) over the monotone
// eigenspace compression bounds. The lower boundary uses S = L; the upper
// boundary reuses the same machinery with S = -L.
class PencilTracer {
 public:
  PencilTracer(const Eigen::MatrixXd& s, const Eigen::VectorXd& lam, double lam_max,
               const SolverConfig& cfg)
      : s_(s), lam_(lam), lam_max_(lam_max), cfg_(cfg) {
    x_tol_ = cfg.x_tol > 0.0 ? cfg.x_tol : 1e-10 * std::max(1.0, lam_max);
  }

  struct Probe {
    double m = 0.0;            // minimal pencil eigenvalue
    Eigen::MatrixXd space;     // merged minimal eigenspace
    Eigen::VectorXd comp_values;
    Eigen::MatrixXd comp_vectors;
    double h_minus() const { return comp_values(0); }
    double h_plus() const { return comp_values(comp_values.size() - 1); }
  };

  Probe probe(double alpha) const {
    Eigen::MatrixXd k = s_;
    k.diagonal() -= alpha * lam_;
    Spectrum sp = sym_eig(k);
    double tol = default_mult_tol(sp.values);
    int mult = 1;
    while (mult < sp.values.size() && sp.values(mult) - sp.values(0) <= tol) ++mult;
    Probe p;
    p.m = sp.values(0);
    p.space = sp.vectors.leftCols(mult);
    Eigen::MatrixXd compression =
        p.space.transpose() * lam_.asDiagonal() * p.space;
    Spectrum cs = sym_eig(compression);
    p.comp_values = std::move(cs.values);
    p.comp_vectors = std::move(cs.vectors);
    return p;
  }

  DucSample trace(double x) const {
    double lo = -std::max(1.0, lam_max_) * cfg_.bracket_scale;
    double hi = -lo;
    bool ok = false;
    for (int i = 0; i < cfg_.max_expand; ++i) {
      if (probe(lo).h_minus() <= x) {
        ok = true;
        break;
      }
      lo *= 2.0;
    }
    if (ok) {
      ok = false;
      for (int i = 0; i < cfg_.max_expand; ++i) {
        if (probe(hi).h_plus() >= x) {
          ok = true;
          break;
        }
        hi *= 2.0;
      }
    }
    if (!ok) fail(ErrorCode::Numeric, "bracket failure in boundary trace");

    for (int it = 0; it < cfg_.max_bisect; ++it) {
      double mid = 0.5 * (lo + hi);
      Probe pr = probe(mid);
      if (pr.h_plus() < x - x_tol_) {
        lo = mid;
      } else if (pr.h_minus() > x + x_tol_) {
        hi = mid;
      } else {
        return build_sample(mid, pr, x);
      }
      if (hi - lo < cfg_.crossing_width) {
        // The compression bounds straddle x on a vanishing interval: a jump.
        // The merged eigenspace at the midpoint carries both branches.
        mid = 0.5 * (lo + hi);
        return build_sample(mid, probe(mid), x);
      }
    }
    fail(ErrorCode::Numeric, "bisection iteration cap reached in boundary trace");
  }

 private:
  double spread(const Eigen::VectorXd& g) const {
    return (lam_.array() * g.array().square()).sum();
  }

  DucSample build_sample(double alpha, const Probe& pr, double x) const {
    int k = static_cast<int>(pr.space.cols());
    Eigen::VectorXd nu;
    if (k == 1 || x >= pr.h_plus()) {
      nu = pr.space * pr.comp_vectors.col(k - 1);
    } else if (x <= pr.h_minus()) {
      nu = pr.space * pr.comp_vectors.col(0);
    } else {
      // Rotate between the extreme eigenspace directions until the spread
      // hits x; the intermediate value theorem guarantees a root.
      Eigen::VectorXd nu_plus = pr.space * pr.comp_vectors.col(k - 1);
      Eigen::VectorXd nu_minus = pr.space * pr.comp_vectors.col(0);
      auto at = [&](double theta) {
        Eigen::VectorXd w = std::cos(theta) * nu_plus + std::sin(theta) * nu_minus;
        w /= w.norm();
        return w;
      };
      double a = 0.0;
      double b = std::numbers::pi / 2.0;
      double xa = spread(at(a));
      for (int i = 0; i < 200; ++i) {
        double t = 0.5 * (a + b);
        double xt = spread(at(t));
        if ((xt - x) * (xa - x) <= 0.0) {
          b = t;
        } else {
          a = t;
          xa = xt;
        }
      }
      nu = at(0.5 * (a + b));
    }
    DucSample out;
    out.alpha = alpha;
    out.x = spread(nu);
    out.y = nu.dot(s_ * nu);
    out.m_alpha = out.y - alpha * out.x;  // Rayleigh identity for nu in the eigenspace
    out.multiplicity = k;
    out.h_minus = pr.h_minus();
    out.h_plus = pr.h_plus();
    return out;
  }

  const Eigen::MatrixXd& s_;
  const Eigen::VectorXd& lam_;
  double lam_max_;
  SolverConfig cfg_;
  double x_tol_;
};

DucSample upper_point(const GraphBasis& b, double x, const SolverConfig& cfg) {
  Eigen::MatrixXd negated = -b.laplacian();
  PencilTracer tracer(negated, b.laplacian_spectrum().values, b.lambda_max(), cfg);
  DucSample s = tracer.trace(x);
  s.alpha = -s.alpha;
  s.y = -s.y;
  s.m_alpha = s.y - s.alpha * s.x;
  return s;
}

}  // namespace

Eigen::MatrixXd k_matrix(const GraphBasis& b, double alpha) {
  Eigen::MatrixXd k = b.laplacian();
  k.diagonal() -= alpha * b.laplacian_spectrum().values;
  return k;
}

std::pair<double, Eigen::MatrixXd> min_eigpair(const GraphBasis& b, double alpha,
                                               double mult_tol) {
  Spectrum sp = sym_eig(k_matrix(b, alpha));
  double tol = mult_tol > 0.0 ? mult_tol : default_mult_tol(sp.values);
  int mult = 1;
  while (mult < sp.values.size() && sp.values(mult) - sp.values(0) <= tol) ++mult;
  return {sp.values(0), sp.vectors.leftCols(mult)};
}

std::pair<double, double> h_bounds(const GraphBasis& b, double alpha, double mult_tol) {
  auto [m, space] = min_eigpair(b, alpha, mult_tol);
  (void)m;
  Eigen::MatrixXd compression = space.transpose() *
                                b.laplacian_spectrum().values.asDiagonal() * space;
  Spectrum cs = sym_eig(compression);
  return {cs.values(0), cs.values(cs.values.size() - 1)};
}

DucSample duc_point_for_x(const GraphBasis& b, double x, const SolverConfig& cfg) {
  if (!(x > 0.0) || !(x < b.lambda_max()))
    fail(ErrorCode::Domain, "spread target x must lie strictly inside (0, lambda_max)");
  PencilTracer tracer(b.laplacian(), b.laplacian_spectrum().values, b.lambda_max(), cfg);
  return tracer.trace(x);
}

std::pair<Eigen::Vector2d, Eigen::Vector2d> axis_points(const GraphBasis& b) {
  Eigen::Vector2d low(b.laplacian_spectrum().values.sum() / b.order(), 0.0);
  Eigen::Vector2d left(0.0, b.laplacian()(0, 0));
  return {low, left};
}

UncertaintyCurve duc_curve(const GraphBasis& b, int num_points, const SolverConfig& cfg) {
  if (num_points < 2) fail(ErrorCode::InvalidArgument, "duc_curve needs num_points >= 2");
  const int n = b.order();
  UncertaintyCurve curve;
  curve.lambda_max = b.lambda_max();
  auto [low, left] = axis_points(b);
  curve.axis_low = low;
  curve.axis_left = left;

  if (n == 2) {
    // The whole region is a circle; emit its parametrization directly.
    double w = -b.laplacian()(0, 1);
    curve.samples.resize(64);
    for (int k = 0; k < 64; ++k) {
      double theta = 2.0 * std::numbers::pi * k / 64.0;
      double a = std::cos(theta);
      double s = std::sin(theta);
      curve.samples[k] = {kNaN, w * (a - s) * (a - s), 2.0 * w * s * s, kNaN, 0, kNaN, kNaN};
    }
    return curve;
  }

  std::vector<std::pair<DucSample, bool>> staged;  // sample, is_exact_anchor
  staged.reserve(num_points + 2);
  double l00 = b.laplacian()(0, 0);
  staged.push_back({{-kInf, 0.0, l00, l00, 1, 0.0, 0.0}, true});
  staged.push_back({{0.0, low.x(), 0.0, 0.0, 1, low.x(), low.x()}, true});

  std::vector<DucSample> traced(num_points);
  PencilTracer tracer(b.laplacian(), b.laplacian_spectrum().values, curve.lambda_max, cfg);
  parallel_for(num_points, [&](int i) {
    double x = curve.lambda_max * (i + 1) / (num_points + 1);
    traced[i] = tracer.trace(x);
  });
  for (DucSample& s : traced) staged.push_back({s, false});

  std::stable_sort(staged.begin(), staged.end(),
                   [](const auto& a, const auto& b) { return a.first.x < b.first.x; });
  double dedup = 1e-10 * std::max(1.0, curve.lambda_max);
  for (size_t i = 0; i < staged.size(); ++i) {
    if (!curve.samples.empty() && staged[i].first.x - curve.samples.back().x <= dedup) {
      if (staged[i].second) curve.samples.back() = staged[i].first;  // exact anchors win
      continue;
    }
    curve.samples.push_back(staged[i].first);
  }
  return curve;
}

namespace {

double cross(const RegionPoint& o, const RegionPoint& a, const RegionPoint& p) {
  return (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
}

std::vector<RegionPoint> convex_hull(std::vector<RegionPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RegionPoint& a, const RegionPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RegionPoint& a, const RegionPoint& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<RegionPoint> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  size_t lower_size = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower_size && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // counterclockwise, last point == first dropped
  return hull;
}

double segment_distance(const RegionPoint& a, const RegionPoint& b, const RegionPoint& p) {
  double dx = b.x - a.x;
  double dy = b.y - a.y;
  double len2 = dx * dx + dy * dy;
  double t = len2 == 0.0 ? 0.0 : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  double ex = p.x - (a.x + t * dx);
  double ey = p.y - (a.y + t * dy);
  return std::hypot(ex, ey);
}

// 0 inside; otherwise the distance to the hull outline.
double hull_violation(const std::vector<RegionPoint>& hull, const RegionPoint& p) {
  if (hull.empty()) return kInf;
  if (hull.size() == 1) return std::hypot(p.x - hull[0].x, p.y - hull[0].y);
  if (hull.size() == 2) return segment_distance(hull[0], hull[1], p);
  bool inside = true;
  for (size_t i = 0; i < hull.size(); ++i) {
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0.0) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  double best = kInf;
  for (size_t i = 0; i < hull.size(); ++i)
    best = std::min(best, segment_distance(hull[i], hull[(i + 1) % hull.size()], p));
  return best;
}

}  // namespace

FeasibilityRegion feasibility_region(const GraphBasis& b, int num_curve_points, int num_samples,
                                     std::uint64_t seed, const SolverConfig& cfg) {
  if (num_samples < 1) fail(ErrorCode::InvalidArgument, "feasibility_region needs num_samples >= 1");
  const int n = b.order();
  const Eigen::VectorXd& lam = b.laplacian_spectrum().values;
  const Eigen::MatrixXd& lap = b.laplacian();

  FeasibilityRegion region;
  region.lambda_max = b.lambda_max();
  region.lambda_tilde_0 = additive_bounds(b).lower;
  region.lower = duc_curve(b, std::max(num_curve_points, 2), cfg);

  Rng rng(seed);
  region.witnesses.reserve(num_samples);
  for (int i = 0; i < num_samples; ++i) {
    Eigen::VectorXd g = random_unit_vector(rng, n);
    double x = (lam.array() * g.array().square()).sum();
    region.witnesses.push_back({x, g.dot(lap * g)});
  }

  const double box_slack = 1e-9;
  const double hull_tol = 1e-6 * std::max(1.0, region.lambda_max);
  auto in_box = [&](const RegionPoint& p) {
    return p.x >= -box_slack && p.x <= region.lambda_max + box_slack && p.y >= -box_slack &&
           p.y <= region.lambda_max + box_slack;
  };

  if (n == 2) {
    double w = -lap(0, 1);
    double circle_tol = 1e-10 * std::max(1.0, w * w);
    auto on_circle = [&](double x, double y) {
      return std::abs((x - w) * (x - w) + (y - w) * (y - w) - w * w) <= circle_tol;
    };
    region.in_box = true;
    region.circle_ok = true;
    region.min_x_plus_y = kInf;
    for (const DucSample& s : region.lower.samples) {
      region.in_box = region.in_box && in_box({s.x, s.y});
      region.circle_ok = region.circle_ok && on_circle(s.x, s.y);
      region.min_x_plus_y = std::min(region.min_x_plus_y, s.x + s.y);
    }
    for (const RegionPoint& p : region.witnesses) {
      region.in_box = region.in_box && in_box(p);
      region.circle_ok = region.circle_ok && on_circle(p.x, p.y);
      region.min_x_plus_y = std::min(region.min_x_plus_y, p.x + p.y);
    }
    region.half_plane_ok = region.min_x_plus_y >= region.lambda_tilde_0 - 1e-8;
    region.hull_ok = true;
    region.midpoints_ok = true;
    region.convex_ok = true;
    return region;
  }

  // Mirrored trace of the upper boundary at the same interior targets.
  int upper_targets = std::max(num_curve_points, 2);
  region.upper.resize(upper_targets + 1);
  region.upper[upper_targets] = {kInf, 0.0, lap(0, 0), lap(0, 0), 1, 0.0, 0.0};
  parallel_for(upper_targets, [&](int i) {
    double x = region.lambda_max * (i + 1) / (upper_targets + 1);
    region.upper[i] = upper_point(b, x, cfg);
  });
  std::stable_sort(region.upper.begin(), region.upper.end(),
                   [](const DucSample& a, const DucSample& b) { return a.x < b.x; });

  // Slope monotonicity of the traced lower boundary.
  region.convex_ok = true;
  {
    const auto& s = region.lower.samples;
    double slope_tol = 1e-6 * std::max(1.0, region.lambda_max);
    for (size_t i = 2; i < s.size(); ++i) {
      double s1 = (s[i - 1].y - s[i - 2].y) / (s[i - 1].x - s[i - 2].x);
      double s2 = (s[i].y - s[i - 1].y) / (s[i].x - s[i - 1].x);
      if (s2 < s1 - slope_tol) region.convex_ok = false;
    }
  }

  std::vector<RegionPoint> boundary;
  for (const DucSample& s : region.lower.samples) boundary.push_back({s.x, s.y});
  for (const DucSample& s : region.upper) boundary.push_back({s.x, s.y});

  const double member_tol = hull_tol;
  double xeps = 1e-12 * region.lambda_max;
  auto band_membership = [&](const RegionPoint& p, bool extend_boundary) {
    // Supporting lines through freshly traced boundary points at p.x bound
    // the convex region from below and above regardless of trace jitter.
    double xc = std::clamp(p.x, xeps, region.lambda_max - xeps);
    try {
      DucSample lo = duc_point_for_x(b, xc, cfg);
      DucSample up = upper_point(b, xc, cfg);
      bool member = p.y >= lo.y + lo.alpha * (p.x - lo.x) - member_tol &&
                    p.y <= up.y + up.alpha * (p.x - up.x) + member_tol;
      if (member && extend_boundary) {
        region.lower.samples.push_back(lo);
        region.upper.push_back(up);
        boundary.push_back({lo.x, lo.y});
        boundary.push_back({up.x, up.y});
      }
      return member;
    } catch (const Error&) {
      return false;
    }
  };

  std::vector<RegionPoint> hull = convex_hull(boundary);
  bool refined = false;
  bool members_ok = true;
  for (const RegionPoint& p : region.witnesses) {
    if (hull_violation(hull, p) > hull_tol) {
      members_ok = band_membership(p, true) && members_ok;
      refined = true;
    }
  }
  if (refined) {
    hull = convex_hull(boundary);
    std::stable_sort(region.lower.samples.begin(), region.lower.samples.end(),
                     [](const DucSample& a, const DucSample& b) { return a.x < b.x; });
    std::stable_sort(region.upper.begin(), region.upper.end(),
                     [](const DucSample& a, const DucSample& b) { return a.x < b.x; });
  }
  region.max_hull_violation = 0.0;
  for (const RegionPoint& p : region.witnesses)
    region.max_hull_violation = std::max(region.max_hull_violation, hull_violation(hull, p));
  region.hull_ok = members_ok && region.max_hull_violation <= hull_tol;

  // Convexity cross-check: witness-pair midpoints must stay achievable.
  region.midpoints_ok = true;
  int pairs = std::min<int>(100, num_samples / 2);
  std::uniform_int_distribution<int> pick(0, num_samples - 1);
  for (int k = 0; k < pairs; ++k) {
    const RegionPoint& a = region.witnesses[pick(rng)];
    const RegionPoint& c = region.witnesses[pick(rng)];
    RegionPoint mid{0.5 * (a.x + c.x), 0.5 * (a.y + c.y)};
    if (hull_violation(hull, mid) > hull_tol && !band_membership(mid, false))
      region.midpoints_ok = false;
  }

  region.in_box = true;
  region.min_x_plus_y = kInf;
  auto account = [&](const RegionPoint& p) {
    region.in_box = region.in_box && in_box(p);
    region.min_x_plus_y = std::min(region.min_x_plus_y, p.x + p.y);
  };
  for (const DucSample& s : region.lower.samples) account({s.x, s.y});
  for (const DucSample& s : region.upper) account({s.x, s.y});
  for (const RegionPoint& p : region.witnesses) account(p);
  region.half_plane_ok = region.min_x_plus_y >= region.lambda_tilde_0 - 1e-8;
  return region;
}

}  // namespace guf
