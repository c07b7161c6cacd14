#include "samejulia/intpow.hpp"

#include <bit>
#include <cmath>

namespace samejulia {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::optional<std::uint64_t> exact_root(std::uint64_t n, unsigned q) {
  if (q == 0) return std::nullopt;
  if (q == 1 || n < 2) return n;
  // Floating estimate, then correct by at most a couple of steps in integers.
  auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / q)));
  if (r < 1) r = 1;
  for (std::uint64_t cand = (r > 1 ? r - 1 : 1); cand <= r + 1; ++cand) {
    auto p = checked_pow(cand, q);
    if (p && *p == n) return cand;
  }
  return std::nullopt;
}

std::vector<PowerForm> power_forms(std::uint64_t n) {
  std::vector<PowerForm> out;
  if (n < 2) return out;
  const unsigned max_exp = static_cast<unsigned>(std::bit_width(n)) - 1;
  for (unsigned s = max_exp; s >= 1; --s) {
    if (auto r = exact_root(n, s); r && *r >= 2) out.push_back({*r, s});
  }
  return out;
}

std::uint64_t primitive_base(std::uint64_t n) {
  auto forms = power_forms(n);
  return forms.empty() ? n : forms.front().base;
}

bool common_power_base(std::uint64_t n, std::uint64_t m) {
  if (n < 2 || m < 2) return false;
  return primitive_base(n) == primitive_base(m);
}

}  // namespace samejulia
