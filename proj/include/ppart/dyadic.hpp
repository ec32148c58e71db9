#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

namespace ppart {

/// Exact rational of the form numerator / 2^exponent. Kept normalized: the
/// numerator is odd unless the exponent is 0 (zero is 0 / 2^0).
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT
  Dyadic(std::int64_t numerator, int exponent);

  static Dyadic half() { return Dyadic(1, 1); }

  std::int64_t numerator() const noexcept { return num_; }
  int exponent() const noexcept { return exp_; }
  bool is_zero() const noexcept { return num_ == 0; }
  double to_double() const noexcept;

  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic&, const Dyadic&) = default;

  std::string to_string() const;

 private:
  void normalize();

  std::int64_t num_ = 0;
  int exp_ = 0;
};

/// Complex number with exact dyadic real and imaginary parts.
struct DyadicComplex {
  Dyadic re;
  Dyadic im;

  static DyadicComplex one() { return {Dyadic(1), Dyadic(0)}; }
  static DyadicComplex i() { return {Dyadic(0), Dyadic(1)}; }

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  /// |z|^2, exact.
  Dyadic norm() const { return re * re + im * im; }
  std::complex<double> to_complex() const {
    return {re.to_double(), im.to_double()};
  }
  /// Multiplies by i^k.
  DyadicComplex times_i_pow(int k) const;

  DyadicComplex operator-() const { return {-re, -im}; }
  friend DyadicComplex operator+(const DyadicComplex& a,
                                 const DyadicComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend DyadicComplex operator*(const DyadicComplex& a,
                                 const DyadicComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const DyadicComplex&, const DyadicComplex&) = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);
std::ostream& operator<<(std::ostream& os, const DyadicComplex& z);

}  // namespace ppart
