#pragma once

#include <limits>
#include <string>

namespace twoconn {

// A real number stored as sign * exp(log_magnitude). Counts in this library
// routinely exceed 10^(10^6), far beyond any floating-point range.
class LogReal {
 public:
  constexpr LogReal() = default;

  static LogReal zero() { return LogReal{}; }
  static LogReal from_log(double log_magnitude, int sign = 1);
  static LogReal from_double(double value);

  double log_magnitude() const { return log_magnitude_; }
  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  // Overflows to +-inf (or underflows to 0) outside the double range.
  double to_double() const;
  double log10_magnitude() const;

  // "d.dddddde+N" with the requested number of mantissa decimals; works for
  // exponents far outside double range.
  std::string to_scientific(int decimals = 6) const;

  LogReal operator*(const LogReal& other) const;
  LogReal operator/(const LogReal& other) const;
  LogReal operator+(const LogReal& other) const;
  LogReal operator-(const LogReal& other) const;
  LogReal operator-() const;

  bool operator==(const LogReal&) const = default;

 private:
  double log_magnitude_ = -std::numeric_limits<double>::infinity();
  int sign_ = 0;
};

}  // namespace twoconn
