#include "twoconn/rng.hpp"

#include <cmath>

#include "twoconn/error.hpp"

namespace twoconn {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& word : s_) {
    x += 0x9e3779b97f4a7c15ULL;
    word = mix64(x);
  }
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {
__extension__ using Wide = unsigned __int128;
}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection of the biased low range.
  Wide product = static_cast<Wide>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<Wide>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::int64_t Rng::binomial(std::int64_t trials, double p) {
  if (trials < 0 || !(p >= 0.0 && p <= 1.0)) throw DomainError("binomial: bad parameters");
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;

  const double n = static_cast<double>(trials);
  const double q = 1.0 - p;
  const double odds = p / q;
  auto mode = static_cast<std::int64_t>(std::floor((n + 1.0) * p));
  if (mode > trials) mode = trials;
  const double md = static_cast<double>(mode);
  const double f_mode = std::exp(std::lgamma(n + 1.0) - std::lgamma(md + 1.0) - std::lgamma(n - md + 1.0) +
                                 md * std::log(p) + (n - md) * std::log1p(-p));

  // Inversion over the support ordered mode, mode+1, mode-1, mode+2, ...
  double u = uniform() - f_mode;
  if (u < 0.0) return mode;
  std::int64_t up = mode, down = mode;
  double f_up = f_mode, f_down = f_mode;
  while (up < trials || down > 0) {
    if (up < trials) {
      f_up *= static_cast<double>(trials - up) / static_cast<double>(up + 1) * odds;
      ++up;
      u -= f_up;
      if (u < 0.0) return up;
    }
    if (down > 0) {
      f_down *= static_cast<double>(down) / static_cast<double>(trials - down + 1) / odds;
      --down;
      u -= f_down;
      if (u < 0.0) return down;
    }
    if ((up >= trials || f_up < 1e-300) && (down <= 0 || f_down < 1e-300)) break;
  }
  // Only reachable through rounding in the last ulp of u.
  return mode;
}

}  // namespace twoconn
