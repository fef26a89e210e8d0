#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace algint::qnum {

/// Deformation parameter of b b̄ - q b̄ b = 1, restricted to 0 < q < 1.
class QParameter {
 public:
  /// Throws std::domain_error outside (0, 1).
  explicit QParameter(double q);
  double value() const { return q_; }

 private:
  double q_;
};

struct NumericTolerance {
  double abs_tol = 1e-10;
  double truncation_tol = 1e-16;
};

/// i_q = (qⁱ - 1)/(q - 1) for any positive base; base 1 gives i.
double q_integer(std::size_t i, double base);
inline double q_integer(std::size_t i, QParameter q) { return q_integer(i, q.value()); }

/// n_q! = n_q (n-1)_q ⋯ 1_q, with 0_q! = 1.
double q_factorial(std::size_t n, double base);
inline double q_factorial(std::size_t n, QParameter q) { return q_factorial(n, q.value()); }

/// e_base^t = Σ tⁿ / n_base!, summed until a term drops below the
/// truncation tolerance. For base < 1 the series needs |t| < 1/(1-base);
/// outside that disc std::domain_error is thrown.
double q_exponential(double t, double base, NumericTolerance tol = {});

/// Jackson integral ∫_0^a d_q t f(t) = a(1-q) Σ_n f(aqⁿ) qⁿ. The sum stops
/// once a(1-q)qⁿ times the largest |f| seen so far (at least 1) is below
/// the truncation tolerance.
double jackson_integral(const std::function<double(double)>& f, double a, QParameter q,
                        NumericTolerance tol = {});

struct IdentityCheck {
  bool passed = false;
  double lhs = 0;
  double rhs = 0;
  double residual = 0;
};

/// n_q! against ∫_0^{1/(1-q)} d_q t e_{1/q}^{-qt} tⁿ. n ≤ 12.
IdentityCheck verify_q_factorial_identity(std::size_t n, QParameter q,
                                          NumericTolerance tol = {});

/// Nodes and weights of n-point Gauss–Laguerre quadrature for ∫_0^∞ e^{-s} g(s) ds.
struct LaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

LaguerreRule gauss_laguerre(std::size_t order);

/// ∫ dz*dz/(2πi) e^{-|z|²} zⁱ z*ʲ / √(i! j!). The angular integral is taken
/// analytically (zero unless i = j); the radial part ∫_0^∞ sⁱ e^{-s} ds comes
/// from Gauss–Laguerre quadrature. i, j ≤ 8.
double gaussian_moment(std::size_t i, std::size_t j, std::size_t quad_order);

}  // namespace algint::qnum
