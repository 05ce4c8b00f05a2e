#include "sparsepd/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace sparsepd {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kInvSqrt2 = 0.7071067811865475244;
}  // namespace

void QuadratureSpec::validate() const {
  if (hermite_nodes < 2) throw std::invalid_argument("hermite_nodes must be >= 2");
  if (legendre_nodes < 2) throw std::invalid_argument("legendre_nodes must be >= 2");
  for (std::size_t i = 1; i < split_points.size(); ++i)
    if (!(split_points[i - 1] < split_points[i]))
      throw std::invalid_argument("split_points must be strictly increasing");
}

double normal_pdf(double x, double mean, double variance) {
  if (!(variance > 0.0)) throw std::domain_error("normal_pdf: variance must be positive");
  const double z = (x - mean);
  return std::exp(-0.5 * z * z / variance) * kInvSqrt2Pi / std::sqrt(variance);
}

double log_normal_pdf(double x, double mean, double variance) {
  if (!(variance > 0.0)) throw std::domain_error("log_normal_pdf: variance must be positive");
  const double z = (x - mean);
  return -0.5 * (kLog2Pi + std::log(variance)) - 0.5 * z * z / variance;
}

double upper_tail(double x) {
  double p = 0.5 * std::erfc(x * kInvSqrt2);
  if (p > 0.0 || x <= 0.0) return p;
  // erfc underflowed (x > ~26.5 in erfc's argument scale).  Fall back to the
  // Mills asymptotic series Phi~(x) = phi(x)/x * (1 - 1/x^2 + 3/x^4 - ...),
  // which keeps the result a positive subnormal out to x = 38.
  const double phi = std::exp(-0.5 * x * x) * kInvSqrt2Pi;
  double term = 1.0, series = 1.0;
  const double ix2 = 1.0 / (x * x);
  for (int k = 1; k <= 8; ++k) {
    term *= -(2.0 * k - 1.0) * ix2;
    series += term;
  }
  return phi / x * series;
}

double log_upper_tail(double x) {
  if (x < 20.0) return std::log(upper_tail(x));
  double term = 1.0, series = 1.0;
  const double ix2 = 1.0 / (x * x);
  for (int k = 1; k <= 8; ++k) {
    term *= -(2.0 * k - 1.0) * ix2;
    series += term;
  }
  return -0.5 * x * x - 0.5 * kLog2Pi - std::log(x) + std::log(series);
}

TruncatedMoment truncated_second_moment(double theta, double lambda) {
  if (!(lambda >= 0.0)) throw std::domain_error("truncated_second_moment: lambda must be >= 0");
  // X ~ N(theta,1); T = X - theta ~ N(0,1).  The upper tail X > lambda is
  // T > lambda - theta, the lower tail X < -lambda is T < -(lambda + theta).
  // Both reduce through int_z^inf t^2 phi(t) dt = z phi(z) + Phi~(z).
  const double z1 = lambda - theta;
  const double z2 = lambda + theta;
  auto partial = [](double z) { return z * normal_pdf(z, 0.0, 1.0) + upper_tail(z); };
  TruncatedMoment out;
  out.mass = upper_tail(z1) + upper_tail(z2);
  out.moment = partial(z1) + partial(z2);
  return out;
}

namespace {

// Orthonormal Hermite recurrence at z: p1 = H~_n(z), pp = H~_n'(z).
void hermite_eval(int n, double z, double& p1, double& pp) {
  p1 = 0.75112554446494248286;  // pi^{-1/4}
  double p2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(j / (j + 1.0)) * p3;
  }
  pp = std::sqrt(2.0 * n) * p2;
}

QuadratureRule compute_hermite(int n) {
  // Roots of H~_n are the eigenvalues of the Jacobi matrix (zero diagonal,
  // off-diagonal b_j = sqrt(j/2)).  Bracket each one by Sturm-count bisection
  // -- a plain Newton chain off extrapolated guesses jumps basins once
  // n gets large -- then polish with Newton inside the bracket.
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double bound = std::sqrt(2.0 * n + 1.0);
  auto count_below = [n](double x) {
    int cnt = 0;
    double d = -x;
    for (int j = 1; j <= n; ++j) {
      if (std::abs(d) < 1e-300) d = -1e-300;
      if (d < 0) ++cnt;
      if (j < n) d = -x - (0.5 * j) / d;
    }
    return cnt;  // number of eigenvalues < x
  };
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th largest root = eigenvalue with exactly n-1-i others below it
    double lo = 0.0, hi = bound;
    while (hi - lo > 1e-13 * bound) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) >= n - i) hi = mid; else lo = mid;
    }
    double z = 0.5 * (lo + hi);
    if (n % 2 == 1 && i == half - 1) z = 0.0;  // middle root is exact
    double p1 = 0.0, pp = 0.0;
    for (int iter = 0; iter < 8; ++iter) {
      hermite_eval(n, z, p1, pp);
      const double dz = p1 / pp;
      const double zn = z - dz;
      if (!(zn >= lo - 1e-9 && zn <= hi + 1e-9)) break;
      z = zn;
      if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    hermite_eval(n, z, p1, pp);
    rule.nodes[n - 1 - i] = z;
    rule.nodes[i] = -z;
    rule.weights[n - 1 - i] = 2.0 / (pp * pp);
    rule.weights[i] = rule.weights[n - 1 - i];
  }
  return rule;
}

QuadratureRule compute_legendre_unit(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double eps = 1e-15;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) <= eps) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

const QuadratureRule& legendre_unit_cached(int n) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_legendre_unit(n)).first;
  return it->second;
}

double panel_gl16(const std::function<double(double)>& f, double lo, double hi) {
  const QuadratureRule& unit = legendre_unit_cached(16);
  const double xm = 0.5 * (hi + lo), xl = 0.5 * (hi - lo);
  double acc = 0.0;
  for (std::size_t i = 0; i < unit.nodes.size(); ++i)
    acc += unit.weights[i] * f(xm + xl * unit.nodes[i]);
  return acc * xl;
}

}  // namespace

const QuadratureRule& hermite_rule(int n) {
  if (n < 2 || n > 256) throw std::domain_error("hermite_rule: n must be in [2, 256]");
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_hermite(n)).first;
  return it->second;
}

QuadratureRule legendre_rule(int n, double lo, double hi) {
  if (n < 2 || n > 256) throw std::domain_error("legendre_rule: n must be in [2, 256]");
  if (!(lo < hi)) throw std::domain_error("legendre_rule: requires lo < hi");
  const QuadratureRule& unit = legendre_unit_cached(n);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double xm = 0.5 * (hi + lo), xl = 0.5 * (hi - lo);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = xm + xl * unit.nodes[i];
    rule.weights[i] = xl * unit.weights[i];
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol) {
  if (!(lo <= hi)) throw std::domain_error("integrate: requires lo <= hi");
  if (lo == hi) return 0.0;
  struct Segment {
    double lo, hi, whole, tol;
    int depth;
  };
  std::vector<Segment> stack;
  stack.push_back({lo, hi, panel_gl16(f, lo, hi), abs_tol, 0});
  double total = 0.0;
  while (!stack.empty()) {
    const Segment s = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (s.lo + s.hi);
    const double left = panel_gl16(f, s.lo, mid);
    const double right = panel_gl16(f, mid, s.hi);
    if (std::abs(left + right - s.whole) <= s.tol || s.depth >= 48) {
      total += left + right;
    } else {
      stack.push_back({s.lo, mid, left, 0.5 * s.tol, s.depth + 1});
      stack.push_back({mid, s.hi, right, 0.5 * s.tol, s.depth + 1});
    }
  }
  return total;
}

double gauss_expectation(const std::function<double(double)>& g, double mean,
                         double sd, const std::vector<double>& splits,
                         double abs_tol) {
  if (!(sd > 0.0)) throw std::domain_error("gauss_expectation: sd must be positive");
  const double lo = mean - 10.0 * sd, hi = mean + 10.0 * sd;
  std::vector<double> cuts{lo};
  for (double s : splits)
    if (s > lo && s < hi) cuts.push_back(s);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  const double variance = sd * sd;
  auto integrand = [&](double x) { return g(x) * normal_pdf(x, mean, variance); };
  double total = 0.0;
  const double seg_tol = abs_tol / static_cast<double>(cuts.size() - 1);
  for (std::size_t i = 1; i < cuts.size(); ++i)
    total += integrate(integrand, cuts[i - 1], cuts[i], seg_tol);
  return total;
}

}  // namespace sparsepd
