#include "ppart/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace ppart {

Dyadic::Dyadic(std::int64_t numerator, int exponent)
    : num_(numerator), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ % 2) == 0) {
    num_ /= 2;
    --exp_;
  }
  while (exp_ < 0) {
    num_ *= 2;
    ++exp_;
  }
}

double Dyadic::to_double() const noexcept {
  return std::ldexp(static_cast<double>(num_), -exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  if (e > 60) throw std::overflow_error("dyadic exponent overflow");
  const std::int64_t na = a.num_ * (std::int64_t{1} << (e - a.exp_));
  const std::int64_t nb = b.num_ * (std::int64_t{1} << (e - b.exp_));
  return Dyadic(na + nb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a.num_, b.num_, &out))
    throw std::overflow_error("dyadic numerator overflow");
  return Dyadic(out, a.exp_ + b.exp_);
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

DyadicComplex DyadicComplex::times_i_pow(int k) const {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return *this;
    case 1:
      return {-im, re};
    case 2:
      return {-re, -im};
    default:
      return {im, -re};
  }
}

std::string DyadicComplex::to_string() const {
  if (im.is_zero()) return re.to_string();
  if (re.is_zero()) return im.to_string() + "i";
  return "(" + re.to_string() + (im.numerator() < 0 ? "" : "+") +
         im.to_string() + "i)";
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
  return os << d.to_string();
}

std::ostream& operator<<(std::ostream& os, const DyadicComplex& z) {
  return os << z.to_string();
}

}  // namespace ppart
