#include "twoconn/log_real.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace twoconn {

LogReal LogReal::from_log(double log_magnitude, int sign) {
  LogReal out;
  if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity()) return out;
  out.log_magnitude_ = log_magnitude;
  out.sign_ = sign > 0 ? 1 : -1;
  return out;
}

LogReal LogReal::from_double(double value) {
  if (value == 0.0) return LogReal{};
  return from_log(std::log(std::fabs(value)), value > 0 ? 1 : -1);
}

double LogReal::to_double() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_magnitude_);
}

double LogReal::log10_magnitude() const { return log_magnitude_ / std::log(10.0); }

std::string LogReal::to_scientific(int decimals) const {
  if (sign_ == 0) return "0";
  double l10 = log10_magnitude();
  double exponent = std::floor(l10);
  double mantissa = std::pow(10.0, l10 - exponent);
  double scale = std::pow(10.0, decimals);
  // Rounding may carry the mantissa to 10.
  if (std::round(mantissa * scale) >= 10.0 * scale) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.*fe%+.0f", sign_ < 0 ? "-" : "", decimals, mantissa, exponent);
  return buf;
}

LogReal LogReal::operator*(const LogReal& other) const {
  if (sign_ == 0 || other.sign_ == 0) return LogReal{};
  return from_log(log_magnitude_ + other.log_magnitude_, sign_ * other.sign_);
}

LogReal LogReal::operator/(const LogReal& other) const {
  if (other.sign_ == 0) return from_log(std::numeric_limits<double>::infinity(), sign_ == 0 ? 1 : sign_);
  if (sign_ == 0) return LogReal{};
  return from_log(log_magnitude_ - other.log_magnitude_, sign_ * other.sign_);
}

LogReal LogReal::operator+(const LogReal& other) const {
  if (sign_ == 0) return other;
  if (other.sign_ == 0) return *this;
  const LogReal& big = log_magnitude_ >= other.log_magnitude_ ? *this : other;
  const LogReal& small = log_magnitude_ >= other.log_magnitude_ ? other : *this;
  double diff = small.log_magnitude_ - big.log_magnitude_;  // <= 0
  if (big.sign_ == small.sign_) return from_log(big.log_magnitude_ + std::log1p(std::exp(diff)), big.sign_);
  if (diff == 0.0) return LogReal{};
  return from_log(big.log_magnitude_ + std::log(-std::expm1(diff)), big.sign_);
}

LogReal LogReal::operator-(const LogReal& other) const { return *this + (-other); }

LogReal LogReal::operator-() const {
  LogReal out = *this;
  out.sign_ = -sign_;
  return out;
}

}  // namespace twoconn
