#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace pathlab {

inline bool is_prime_power(std::uint64_t q, std::uint32_t* base = nullptr,
                           std::uint32_t* exp = nullptr) {
  if (q < 2) return false;
  std::uint64_t b = 2;
  while (b * b <= q && q % b != 0) ++b;
  if (b * b > q) b = q;  // q prime
  std::uint32_t e = 0;
  std::uint64_t x = q;
  while (x % b == 0) {
    x /= b;
    ++e;
  }
  if (x != 1) return false;
  if (base) *base = static_cast<std::uint32_t>(b);
  if (exp) *exp = e;
  return true;
}

inline double two_beta_log_beta(double beta) { return 2.0 * beta * std::log(beta); }

// Unique beta >= 1 with 2 beta log beta = target (increasing on [1, inf)).
inline double beta_solve(double target) {
  if (!(target >= 0.0)) throw std::invalid_argument("beta_solve: target >= 0 required");
  if (target == 0.0) return 1.0;
  double lo = 1.0, hi = 2.0;
  while (two_beta_log_beta(hi) < target) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (two_beta_log_beta(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct BetaWindow {
  double lo = 0.0;       // lower limit on 2 beta log beta
  double hi = 0.0;       // upper limit on 2 beta log beta
  double beta_lo = 1.0;
  double beta_hi = 1.0;
  bool feasible = false;

  // Midpoint of the window on the 2 beta log beta scale.
  double beta_mid() const { return beta_solve(0.5 * (lo + hi)); }
};

inline BetaWindow beta_window(double N, double n, double p, double alpha) {
  if (!(N > 2 * n) || !(p > 0.0 && p < 1.0) || !(alpha > 0.0 && alpha <= 0.5))
    throw std::domain_error("beta_window: need N > 2n, 0 < p < 1, 0 < alpha <= 1/2");
  const double r = N / n;
  const double anp = alpha * n * p;
  BetaWindow w;
  w.lo = std::max(2.0 * std::log(2.0 * std::exp(1.0)),
                  (2.0 / anp) * std::log(1.0 / anp));
  w.hi = std::min(2.0 * (1.0 / p) * std::log(1.0 / p),
                  (1.0 / (n * p)) * (std::log(r) - std::log(alpha * std::pow(2.0, 1.0 / alpha))));
  w.feasible = w.lo <= w.hi;
  w.beta_lo = beta_solve(std::max(w.lo, 0.0));
  w.beta_hi = beta_solve(std::max(w.hi, 0.0));
  return w;
}

enum class Regime { subcritical, t13_i, t13_ii, t14_i, t14_ii, out_of_scope };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::subcritical: return "subcritical-p<=1/N";
    case Regime::t13_i: return "T1.3-i";
    case Regime::t13_ii: return "T1.3-ii";
    case Regime::t14_i: return "T1.4-i";
    case Regime::t14_ii: return "T1.4-ii";
    case Regime::out_of_scope: return "out-of-scope";
  }
  return "?";
}

struct RegimeReport {
  Regime regime = Regime::out_of_scope;
  double omega = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::string notes;
};

inline double expected_isolated_edges(std::uint64_t N, double p) {
  if (N < 2 || !(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("expected_isolated_edges: N >= 2, p in [0,1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return N == 2 ? 1.0 : 0.0;
  const double logv = std::log(static_cast<double>(N)) + std::log(static_cast<double>(N - 1)) -
                      std::log(2.0) + std::log(p) +
                      2.0 * static_cast<double>(N - 2) * std::log1p(-p);
  return std::exp(logv);
}

// Finite-scale proxy for the asymptotic hypothesis p >> 1/N^2.
inline constexpr double kSubcriticalProxyFactor = 100.0;

inline RegimeReport regime_classify(double N, double n, double p,
                                    double proxy_factor = kSubcriticalProxyFactor) {
  if (!(N > n) || !(n >= 2) || !(p > 0.0 && p <= 1.0))
    throw std::domain_error("regime_classify: need N > n >= 2, 0 < p <= 1");
  RegimeReport rep;
  if (N < 3 * n) {
    rep.regime = Regime::out_of_scope;
    rep.lower_bound = 0.0;
    rep.upper_bound = std::numeric_limits<double>::infinity();
    rep.notes = "N < 3n: no theorem applies";
    return rep;
  }
  const double pnN = p * n * N;
  if (p <= 1.0 / N) {
    rep.regime = Regime::subcritical;
    rep.lower_bound = expected_isolated_edges(static_cast<std::uint64_t>(N), p);
    rep.upper_bound = p * N * (N - 1) / 2.0;
    rep.notes = "Theta(p N^2); at p = 1/N the floor is >= N/15";
    if (p < proxy_factor / (N * N)) rep.notes += "; below the p >> 1/N^2 proxy";
    return rep;
  }
  const bool small_N = std::log(N) <= std::log(n) + 2.0 * n;  // N <= n e^{2n}
  if (small_N) {
    const double threshold = std::log(N / n) / (6.0 * n);
    rep.omega = std::log(N / n) / (n * p);
    if (p >= threshold) {
      rep.regime = Regime::t13_i;
      rep.lower_bound = 0.25 * pnN;
      rep.upper_bound = 18.0 * pnN;
    } else {
      rep.regime = Regime::t13_ii;
      if (!(rep.omega >= 6.0))
        throw std::logic_error("regime_classify: omega < 6 inside T1.3-ii");
      const double f = rep.omega / std::log(rep.omega);
      rep.lower_bound = f * pnN / 75.0;
      rep.upper_bound = 8.0 * f * pnN;
    }
  } else {
    const double threshold = std::pow(N, -2.0 / (5.0 * n));
    rep.omega = std::log(N) / (n * p);
    if (p >= threshold) {
      rep.regime = Regime::t14_i;
      rep.lower_bound = n * N / 16.0;
      rep.upper_bound = 0.5 * n * N;
    } else {
      rep.regime = Regime::t14_ii;
      const double f = rep.omega / std::log(rep.omega);
      rep.lower_bound = f * pnN / 75.0;
      rep.upper_bound = 8.0 * f * pnN;
    }
  }
  if ((rep.regime == Regime::t13_ii || rep.regime == Regime::t14_ii) &&
      std::fabs(std::log(rep.omega)) < 0.5)
    rep.notes += "near-boundary: |log omega| < 0.5";
  return rep;
}

inline double erdos_gallai_max(double N, double k) {
  if (!(N >= 2) || !(k >= 2)) throw std::invalid_argument("erdos_gallai_max: N, k >= 2");
  return 0.5 * (k - 2.0) * N;
}

inline double chernoff_lower_tail(double mu, double delta) {
  if (!(mu >= 0.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("chernoff_lower_tail: mu >= 0, delta in (0,1)");
  return std::exp(-mu * delta * delta / 2.0);
}

struct ColoringBounds {
  struct Entry {
    double value = 0.0;
    bool applicable = false;
  };
  double r = 0.0;
  double omega = 0.0;          // (log r)/(np), used by the small-p lower bound
  Entry eq51_lower;            // c >= p N^2 / (3 ex)
  Entry affine_upper;          // c <= r + 1 for prime-power r
  Entry random_upper;          // c <= 2 p N
  Entry corollary_upper;       // c <= 2 r / omega' when p = 1/(omega' n), omega' >= 2
  Entry lower_r7;              // c > r / 7 for p >= 22 log(r/7) / n
  Entry lower_smallp;          // c >= (log omega / 24 omega) r for p <= log(r)/(34 n)
};

inline ColoringBounds coloring_bounds(double N, double n, double p,
                                      std::optional<double> ex_estimate = std::nullopt) {
  const double r = N / n;
  if (!(r >= 2.0)) throw std::domain_error("coloring_bounds: need r = N/n >= 2");
  ColoringBounds b;
  b.r = r;
  b.omega = std::log(r) / (n * p);
  if (ex_estimate && *ex_estimate > 0.0) {
    b.eq51_lower = {p * N * N / (3.0 * *ex_estimate), true};
  }
  const double rint = std::round(r);
  if (std::fabs(r - rint) < 1e-9 && is_prime_power(static_cast<std::uint64_t>(rint)))
    b.affine_upper = {rint + 1.0, true};
  b.random_upper = {2.0 * p * N, true};
  const double omega_prime = 1.0 / (p * n);
  if (omega_prime >= 2.0) b.corollary_upper = {2.0 * r / omega_prime, true};
  if (p >= 22.0 * std::log(r / 7.0) / n) b.lower_r7 = {r / 7.0, true};
  if (p <= std::log(r) / (34.0 * n) && b.omega > 1.0)
    b.lower_smallp = {std::log(b.omega) / (24.0 * b.omega) * r, true};
  return b;
}

}  // namespace pathlab
