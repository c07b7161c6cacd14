#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace samejulia {

/// base^exp, or nullopt on uint64 overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// The integer r with r^q == n, if one exists (q >= 1).
std::optional<std::uint64_t> exact_root(std::uint64_t n, unsigned q);

struct PowerForm {
  std::uint64_t base;
  unsigned exponent;
  friend bool operator==(const PowerForm&, const PowerForm&) = default;
};

/// Every (r, s) with r >= 2, s >= 1 and r^s == n, by decreasing s.
/// The last entry is always (n, 1) for n >= 2; empty for n < 2.
std::vector<PowerForm> power_forms(std::uint64_t n);

/// Smallest r with n = r^s for some s; n itself when n is not a perfect power.
std::uint64_t primitive_base(std::uint64_t n);

/// True iff n = r^s and m = r^S for a common integer r >= 2 (the degree
/// relation forced by a shared non-exceptional Julia set).
bool common_power_base(std::uint64_t n, std::uint64_t m);

}  // namespace samejulia
