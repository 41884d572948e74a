#include "qcycle/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcycle {

CoefficientSeries::CoefficientSeries(int order) {
  if (order < -1) throw std::invalid_argument("series order must be >= -1");
  coefficients_.assign(static_cast<std::size_t>(order + 1), BigInt(0));
}

CoefficientSeries::CoefficientSeries(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {}

CoefficientSeries CoefficientSeries::polynomial(std::vector<BigInt> coefficients, int order) {
  if (order < -1) throw std::invalid_argument("series order must be >= -1");
  coefficients.resize(static_cast<std::size_t>(order + 1), BigInt(0));
  return CoefficientSeries(std::move(coefficients));
}

CoefficientSeries CoefficientSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return polynomial(coefficients_, order);
}

bool CoefficientSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const BigInt& c) { return c == 0; });
}

CoefficientSeries CoefficientSeries::derivative() const {
  if (order() < 0) return *this;
  CoefficientSeries result(order() - 1);
  for (int n = 1; n <= order(); ++n) result[n - 1] = coefficients_[n] * n;
  return result;
}

CoefficientSeries CoefficientSeries::shifted(int power) const {
  if (power < 0) throw std::invalid_argument("shift must be non-negative");
  std::vector<BigInt> coefficients(static_cast<std::size_t>(power), BigInt(0));
  coefficients.insert(coefficients.end(), coefficients_.begin(), coefficients_.end());
  return CoefficientSeries(std::move(coefficients));
}

CoefficientSeries CoefficientSeries::reciprocal() const {
  if (order() < 0) return *this;
  const BigInt& c0 = coefficients_[0];
  if (c0 != 1 && c0 != -1) {
    throw std::domain_error("reciprocal needs a unit constant term");
  }
  CoefficientSeries result(order());
  result[0] = c0;  // 1/c0 == c0 for units
  for (int n = 1; n <= order(); ++n) {
    BigInt sum = 0;
    for (int j = 1; j <= n; ++j) sum += coefficients_[j] * result[n - j];
    result[n] = -sum * c0;
  }
  return result;
}

CoefficientSeries CoefficientSeries::compose(const CoefficientSeries& inner) const {
  if (inner.order() >= 0 && inner[0] != 0) {
    throw std::domain_error("composition needs an inner series without constant term");
  }
  const int order = std::min(this->order(), inner.order());
  if (order < 0) return CoefficientSeries(-1);
  const CoefficientSeries g = inner.truncated(order);
  // Horner: c_0 + g(c_1 + g(c_2 + ...)); terms past x^order vanish since g = O(x).
  CoefficientSeries result(order);
  for (int m = order; m >= 0; --m) {
    result = result * g;
    result[0] += coefficients_[m];
  }
  return result;
}

CoefficientSeries& CoefficientSeries::operator+=(const CoefficientSeries& other) {
  coefficients_.resize(static_cast<std::size_t>(std::min(order(), other.order()) + 1));
  for (std::size_t n = 0; n < coefficients_.size(); ++n) coefficients_[n] += other.coefficients_[n];
  return *this;
}

CoefficientSeries& CoefficientSeries::operator-=(const CoefficientSeries& other) {
  coefficients_.resize(static_cast<std::size_t>(std::min(order(), other.order()) + 1));
  for (std::size_t n = 0; n < coefficients_.size(); ++n) coefficients_[n] -= other.coefficients_[n];
  return *this;
}

CoefficientSeries& CoefficientSeries::operator*=(const BigInt& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

CoefficientSeries operator*(const CoefficientSeries& a, const CoefficientSeries& b) {
  const int order = std::min(a.order(), b.order());
  CoefficientSeries result(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) result[i + j] += a[i] * b[j];
  }
  return result;
}

std::string to_tsv(const CoefficientSeries& series) {
  std::string out;
  for (int n = 0; n <= series.order(); ++n) {
    out += std::to_string(n);
    out += '\t';
    out += series[n].str();
    out += '\n';
  }
  return out;
}

}  // namespace qcycle
