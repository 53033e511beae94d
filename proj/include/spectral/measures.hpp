#ifndef SPECTRAL_MEASURES_HPP
#define SPECTRAL_MEASURES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

#include "spectral/quadrature.hpp"

namespace spectral {

// ---------------------------------------------------------------------------
// Catalan numbers
// ---------------------------------------------------------------------------

/// Exact Catalan number C_n; throws on 64-bit overflow (n > 35).
inline std::uint64_t catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) {
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact division
    unsigned __int128 t = static_cast<unsigned __int128>(c) * (4 * std::uint64_t(k) + 2);
    t /= (k + 2);
    if (t > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("catalan: value exceeds 64-bit range");
    c = static_cast<std::uint64_t>(t);
  }
  return c;
}

/// Closed form of the Catalan generating function, (1 - sqrt(1-4x))/(2x),
/// with the removable singularity filled at x = 0. Defined for x <= 1/4.
inline double catalan_gf(double x) {
  if (x > 0.25) throw std::invalid_argument("catalan_gf: x must be <= 1/4");
  if (std::abs(x) < 1e-4) {
    // short Taylor expansion near the removable singularity
    return 1.0 + x * (1.0 + x * (2.0 + x * (5.0 + x * 14.0)));
  }
  return (1.0 - std::sqrt(1.0 - 4.0 * x)) / (2.0 * x);
}

// ---------------------------------------------------------------------------
// Semicircle measure and its perturbation
// ---------------------------------------------------------------------------

inline double mu_c_density(double x) {
  if (x < -1.0 || x > 1.0) return 0.0;
  return 2.0 / std::numbers::pi * std::sqrt(1.0 - x * x);
}

/// n-th moment of the semicircle measure: C_{n/2}/2^n for even n, else 0.
inline double mu_c_moment(int n) {
  if (n < 0) throw std::invalid_argument("mu_c_moment: n must be >= 0");
  if (n % 2 != 0) return 0.0;
  return static_cast<double>(catalan(n / 2)) / std::ldexp(1.0, n);
}

/// Even moment of the radius-R semicircle: (R/2)^{2k} C_k.
inline double scaled_moment(double radius, int k) {
  if (!(radius > 0)) throw std::invalid_argument("scaled_moment: radius must be positive");
  if (k < 0) throw std::invalid_argument("scaled_moment: k must be >= 0");
  return std::pow(radius / 2.0, 2 * k) * static_cast<double>(catalan(k));
}

/// Density of the perturbed measure:
///   (2/pi) sqrt(1-x^2) / (1 - 2 x/sqrt(N) + 1/N).
/// For N = 1 the density diverges (integrably) at x = 1.
inline double mu_cp_density(double x, int branching) {
  if (branching < 1) throw std::invalid_argument("mu_cp_density: branching must be >= 1");
  if (x < -1.0 || x > 1.0) return 0.0;
  double rn = std::sqrt(double(branching));
  double denom = 1.0 - 2.0 * x / rn + 1.0 / branching;
  double num = mu_c_density(x);
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return num / denom;
}

/// CDF of mu_{c+p} at t, via the substitution x = cos(theta) which removes
/// the N = 1 endpoint singularity. Composite Simpson in theta.
inline double mu_cp_cdf(double t, int branching, int intervals = 4000) {
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0;
  double rn = std::sqrt(double(branching));
  auto integrand = [&](double theta) {
    double s = std::sin(theta);
    double denom = 1.0 - 2.0 * std::cos(theta) / rn + 1.0 / branching;
    if (denom < 1e-300) {
      // N = 1, theta -> 0: sin^2/denom -> (1+cos)/2 * N
      return 2.0 / std::numbers::pi * branching * (1.0 + std::cos(theta)) / 2.0;
    }
    return 2.0 / std::numbers::pi * s * s / denom;
  };
  double a = std::acos(t);  // integrate theta in [a, pi] <=> x in [-1, t]
  double b = std::numbers::pi;
  int m = intervals % 2 == 0 ? intervals : intervals + 1;
  double h = (b - a) / m;
  double s = integrand(a) + integrand(b);
  for (int j = 1; j < m; ++j) s += (j % 2 == 1 ? 4.0 : 2.0) * integrand(a + j * h);
  return s * h / 3.0;
}

/// Integral of f against mu_{c+p}, via x = cos(theta) and the periodic
/// trapezoid rule. For N = 1 the endpoint singularity cancels exactly
/// (sin^2/(2(1-cos)) = (1+cos)/2), so the rule is exact for polynomial f of
/// degree < 2*panels - 1; for N >= 2 the integrand is analytic and the rule
/// converges spectrally.
template <typename F>
double mu_cp_integral(F&& f, int branching, int panels = 4096) {
  if (branching < 1) throw std::invalid_argument("mu_cp_integral: branching must be >= 1");
  if (panels < 2) throw std::invalid_argument("mu_cp_integral: need >= 2 panels");
  double rn = std::sqrt(double(branching));
  auto g = [&](double theta) {
    double c = std::cos(theta);
    double w;
    if (branching == 1) {
      w = (1.0 + c) / 2.0;
    } else {
      double s = std::sin(theta);
      w = s * s / (1.0 - 2.0 * c / rn + 1.0 / branching);
    }
    return w * f(c);
  };
  double h = std::numbers::pi / panels;
  double sum = 0.5 * (g(0.0) + g(std::numbers::pi));
  for (int j = 1; j < panels; ++j) sum += g(j * h);
  return 2.0 / std::numbers::pi * sum * h;
}

// ---------------------------------------------------------------------------
// Borel transform and the rank-one perturbation
// ---------------------------------------------------------------------------

/// Principal square root with cut on (-infinity, 0], by explicit real and
/// imaginary decomposition.
inline std::complex<double> sqrt_principal(std::complex<double> z) {
  double x = z.real(), y = z.imag();
  double r = std::hypot(x, y);
  double re = std::sqrt(std::max(0.0, (r + x) / 2.0));
  double im = std::sqrt(std::max(0.0, (r - x) / 2.0));
  if (y < 0) im = -im;
  return {re, im};
}

inline bool on_support(std::complex<double> z) {
  return z.imag() == 0.0 && z.real() >= -1.0 && z.real() <= 1.0;
}

/// Borel transform of the semicircle measure: F(z) = -2z (1 - sqrt(1 - 1/z^2)),
/// valid on C minus [-1,1].
inline std::complex<double> borel_mu_c(std::complex<double> z) {
  if (on_support(z)) throw std::invalid_argument("borel_mu_c: z lies on [-1,1]");
  std::complex<double> w = 1.0 - 1.0 / (z * z);
  return -2.0 * z * (1.0 - sqrt_principal(w));
}

/// Borel transform of the perturbed spectral measure: F_a = F/(1 + a F).
inline std::complex<double> aronszajn_krein(std::complex<double> z, double alpha) {
  std::complex<double> f = borel_mu_c(z);
  std::complex<double> denom = 1.0 + alpha * f;
  if (std::abs(denom) < 1e-14)
    throw std::domain_error("aronszajn_krein: pole, 1 + alpha F(z) = 0");
  return f / denom;
}

/// (1/pi) Im F_alpha(x + i eps); converges as eps -> 0 to
/// (2/pi) sqrt(1-x^2) / (1 - 4 alpha x + 4 alpha^2) on (-1,1).
inline double boundary_density(double x, double alpha, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("boundary_density: eps must be positive");
  return aronszajn_krein({x, eps}, alpha).imag() / std::numbers::pi;
}

/// Closed-form limit of boundary_density.
inline double boundary_density_limit(double x, double alpha) {
  return mu_c_density(x) / (1.0 - 4.0 * alpha * x + 4.0 * alpha * alpha);
}

// ---------------------------------------------------------------------------
// The resolvent of the mean-shifted multiplication operator
// ---------------------------------------------------------------------------

/// I_lambda = integral of (lambda - 2 sqrt(N) x)^{-1} dmu_c(x), by quadrature.
/// Defined for |lambda| >= 2 sqrt(N); at |lambda| = 2 sqrt(N) the integrand
/// has an integrable endpoint singularity and the rule converges slowly.
inline double i_lambda(double lambda, int branching, const SemicircleQuadrature& quad) {
  double edge = 2.0 * std::sqrt(double(branching));
  if (std::abs(lambda) < edge)
    throw std::invalid_argument("i_lambda: |lambda| must be >= 2 sqrt(N)");
  return quad.integrate([&](double x) { return 1.0 / (lambda - edge * x); });
}

/// Same quantity from the Borel closed form: I_lambda = -F(lambda/(2 sqrt N))/(2 sqrt N).
inline double i_lambda_closed(double lambda, int branching) {
  double edge = 2.0 * std::sqrt(double(branching));
  if (std::abs(lambda) < edge)
    throw std::invalid_argument("i_lambda_closed: |lambda| must be >= 2 sqrt(N)");
  double z = lambda / edge;
  if (std::abs(z) == 1.0) return (z > 0 ? 2.0 : -2.0) / edge;  // F(+-1) limit is -+2
  return -borel_mu_c({z, 0.0}).real() / edge;
}

/// A f = 2 sqrt(N) x f + E(f), where E(f) is the mean against mu_c
/// (a constant function). Acts on node values of the quadrature rule.
inline Eigen::VectorXd apply_mean_shifted_mult(int branching, const SemicircleQuadrature& quad,
                                               const Eigen::VectorXd& f) {
  double edge = 2.0 * std::sqrt(double(branching));
  double mean = quad.integrate_values(f);
  return (edge * quad.nodes().cwiseProduct(f)).array() + mean;
}

/// Solves (lambda I - A) f = g for |lambda| > 2 sqrt(N), where
/// A f = 2 sqrt(N) x f + E(f). Inputs and outputs are node values.
inline Eigen::VectorXd resolvent_mean_shifted_mult(double lambda, int branching,
                                                   const SemicircleQuadrature& quad,
                                                   const Eigen::VectorXd& g) {
  double edge = 2.0 * std::sqrt(double(branching));
  if (std::abs(lambda) <= edge)
    throw std::invalid_argument(
        "resolvent_mean_shifted_mult: lambda inside the spectrum, no bounded inverse");
  if (g.size() != quad.nodes().size())
    throw std::invalid_argument("resolvent_mean_shifted_mult: value vector size mismatch");
  Eigen::VectorXd kernel = (lambda - edge * quad.nodes().array()).inverse();
  double il = i_lambda(lambda, branching, quad);
  double mean_f = quad.integrate_values(g.cwiseProduct(kernel)) / (1.0 - il);
  return (g.array() + mean_f) * kernel.array();
}

/// Spectrum of the tree Laplacian: [N+1-2 sqrt(N), N+1+2 sqrt(N)].
inline std::pair<double, double> spectrum_interval(int branching) {
  if (branching < 1) throw std::invalid_argument("spectrum_interval: branching must be >= 1");
  double edge = 2.0 * std::sqrt(double(branching));
  return {branching + 1.0 - edge, branching + 1.0 + edge};
}

}  // namespace spectral

#endif
