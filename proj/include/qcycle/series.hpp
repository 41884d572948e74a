#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcycle {

using BigInt = boost::multiprecision::cpp_int;

/// Power series truncated after x^order, with exact integer coefficients.
///
/// Arithmetic propagates truncation: a sum or product is known only up to the
/// smaller order of its operands, a derivative loses one order, and a shift by
/// x^s gains s. Order -1 denotes a series with no known coefficients.
class CoefficientSeries {
 public:
  /// The zero series known through x^order.
  explicit CoefficientSeries(int order);
  /// Coefficients c_0..c_N; the order is N.
  explicit CoefficientSeries(std::vector<BigInt> coefficients);
  /// A polynomial, zero-padded (or truncated) to the given order.
  static CoefficientSeries polynomial(std::vector<BigInt> coefficients, int order);

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const BigInt& operator[](int degree) const { return coefficients_.at(degree); }
  BigInt& operator[](int degree) { return coefficients_.at(degree); }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  CoefficientSeries truncated(int order) const;
  bool is_zero() const;

  CoefficientSeries derivative() const;
  /// Multiplication by x^power, power >= 0.
  CoefficientSeries shifted(int power) const;
  /// Multiplicative inverse; the constant term must be 1 or -1.
  CoefficientSeries reciprocal() const;
  /// this(inner(x)); inner must have zero constant term.
  CoefficientSeries compose(const CoefficientSeries& inner) const;

  CoefficientSeries& operator+=(const CoefficientSeries& other);
  CoefficientSeries& operator-=(const CoefficientSeries& other);
  CoefficientSeries& operator*=(const BigInt& scalar);

  friend CoefficientSeries operator+(CoefficientSeries a, const CoefficientSeries& b) {
    return a += b;
  }
  friend CoefficientSeries operator-(CoefficientSeries a, const CoefficientSeries& b) {
    return a -= b;
  }
  friend CoefficientSeries operator*(const CoefficientSeries& a, const CoefficientSeries& b);
  friend CoefficientSeries operator*(CoefficientSeries a, const BigInt& scalar) {
    return a *= scalar;
  }

  friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// One "n<TAB>coefficient" line per known coefficient.
std::string to_tsv(const CoefficientSeries& series);

}  // namespace qcycle
