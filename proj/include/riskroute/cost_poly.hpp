#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace riskroute {

/// Polynomial in the edge flow with coefficients stored constant term first.
///
/// Used for expected latency, variance and standard deviation functions. The
/// nonnegativity of the coefficients is not enforced on construction (so that
/// malformed input can be reported by `validate_instance`), but every solver
/// assumes it.
class CostPoly {
 public:
  CostPoly() = default;
  CostPoly(std::initializer_list<double> coeffs) : coeffs_(coeffs) {}
  explicit CostPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  static CostPoly constant(double c) { return CostPoly{c}; }
  static CostPoly linear(double c0, double c1) { return CostPoly{c0, c1}; }

  const std::vector<double>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  /// Horner evaluation. Templated so that it also works on Eigen arrays.
  template <typename T>
  T operator()(const T& x) const {
    T acc = x * 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double derivative(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) acc = acc * x + static_cast<double>(i) * coeffs_[i];
    return acc;
  }

  /// Exact integral from 0 to x.
  double antiderivative(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i] / static_cast<double>(i + 1);
    return acc * x;
  }

  bool nonnegative() const {
    for (double c : coeffs_)
      if (!(c >= 0.0)) return false;
    return true;
  }

  bool is_zero() const {
    for (double c : coeffs_)
      if (c != 0.0) return false;
    return true;
  }

  int degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      if (coeffs_[i] != 0.0) return static_cast<int>(i);
    return 0;
  }

  friend bool operator==(const CostPoly&, const CostPoly&) = default;

 private:
  std::vector<double> coeffs_;
};

}  // namespace riskroute
