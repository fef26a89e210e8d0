#include "algint/q_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace algint::qnum {

QParameter::QParameter(double q) : q_(q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::domain_error("q must lie in (0, 1), got " + std::to_string(q));
}

double q_integer(std::size_t i, double base) {
  if (!(base > 0.0)) throw std::domain_error("q_integer: base must be positive");
  if (base == 1.0) return static_cast<double>(i);
  // 1 + base + … + base^(i-1); avoids cancellation in (qⁱ - 1)/(q - 1).
  double sum = 0.0, power = 1.0;
  for (std::size_t k = 0; k < i; ++k) {
    sum += power;
    power *= base;
  }
  return sum;
}

double q_factorial(std::size_t n, double base) {
  double product = 1.0;
  for (std::size_t k = 1; k <= n; ++k) product *= q_integer(k, base);
  return product;
}

double q_exponential(double t, double base, NumericTolerance tol) {
  if (!(base > 0.0)) throw std::domain_error("q_exponential: base must be positive");
  if (base < 1.0 && std::abs(t) * (1.0 - base) >= 1.0)
    throw std::domain_error("q_exponential: |t| outside the radius of convergence");
  constexpr std::size_t kMaxTerms = 1000000;
  double sum = 1.0, term = 1.0;
  for (std::size_t n = 1; n < kMaxTerms; ++n) {
    double ratio = t / q_integer(n, base);
    term *= ratio;
    sum += term;
    if (std::abs(term) < tol.truncation_tol && std::abs(ratio) < 1.0) return sum;
  }
  throw std::runtime_error("q_exponential: series did not converge");
}

double jackson_integral(const std::function<double(double)>& f, double a, QParameter q,
                        NumericTolerance tol) {
  if (a == 0.0) return 0.0;
  constexpr std::size_t kMaxTerms = 10000000;
  const double qv = q.value();
  double sum = 0.0, largest = 1.0;
  double point = a, weight = a * (1.0 - qv);
  for (std::size_t n = 0; n < kMaxTerms; ++n) {
    double value = f(point);
    sum += weight * value;
    largest = std::max(largest, std::abs(value));
    if (std::abs(weight) * largest < tol.truncation_tol) return sum;
    point *= qv;
    weight *= qv;
  }
  throw std::runtime_error("jackson_integral: sum did not converge");
}

IdentityCheck verify_q_factorial_identity(std::size_t n, QParameter q,
                                          NumericTolerance tol) {
  if (n > 12) throw std::domain_error("verify_q_factorial_identity: n must be at most 12");
  const double qv = q.value();
  const double exponent = static_cast<double>(n);
  auto integrand = [&](double t) {
    return q_exponential(-qv * t, 1.0 / qv, tol) * std::pow(t, exponent);
  };
  IdentityCheck check;
  check.lhs = q_factorial(n, q);
  check.rhs = jackson_integral(integrand, 1.0 / (1.0 - qv), q, tol);
  check.residual = std::abs(check.lhs - check.rhs);
  check.passed = check.residual < tol.abs_tol;
  return check;
}

LaguerreRule gauss_laguerre(std::size_t order) {
  if (order == 0) throw std::domain_error("gauss_laguerre: order must be positive");
  const double n = static_cast<double>(order);
  LaguerreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  // L_n(x) and L_{n-1}(x) by the three-term recurrence.
  auto laguerre = [](std::size_t degree, double x, double& previous) {
    double p0 = 1.0, p1 = 1.0 - x;
    if (degree == 0) {
      previous = 0.0;
      return p0;
    }
    for (std::size_t k = 2; k <= degree; ++k) {
      double kk = static_cast<double>(k);
      double p2 = ((2.0 * kk - 1.0 - x) * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    previous = p0;
    return p1;
  };

  double x = 0.0;
  for (std::size_t i = 0; i < order; ++i) {
    // Starting points for the i-th smallest root (Stroud & Secrest).
    if (i == 0) {
      x = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      x += 15.0 / (1.0 + 2.5 * n);
    } else {
      double ai = static_cast<double>(i - 1);
      x += (1.0 + 2.55 * ai) / (1.9 * ai) * (x - rule.nodes[i - 2]);
    }
    for (int iter = 0; iter < 100; ++iter) {
      double prev = 0.0;
      double value = laguerre(order, x, prev);
      double derivative = n * (value - prev) / x;
      double step = value / derivative;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = x;
    double prev = 0.0;
    double next = laguerre(order + 1, x, prev);
    rule.weights[i] = x / ((n + 1.0) * (n + 1.0) * next * next);
  }
  return rule;
}

double gaussian_moment(std::size_t i, std::size_t j, std::size_t quad_order) {
  if (i > 8 || j > 8) throw std::domain_error("gaussian_moment: i, j must be at most 8");
  if (i != j) return 0.0;
  const LaguerreRule rule = gauss_laguerre(quad_order);
  double radial = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k)
    radial += rule.weights[k] * std::pow(rule.nodes[k], static_cast<double>(i));
  return radial / std::tgamma(static_cast<double>(i) + 1.0);
}

}  // namespace algint::qnum
