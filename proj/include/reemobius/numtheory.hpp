#pragma once

// Classical number theory on small exponents, plus the Hall-subgroup order
// formulas a1(m), a2(m), a3(m) and the rule deciding which a_j(n) each a_i(l)
// divides when l | n.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "reemobius/arith.hpp"

namespace reemobius::numtheory {

/// Number-theoretic Möbius function by trial division. Inputs here are field
/// exponents (a few hundred at most), never group orders.
inline int moebius(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("moebius: n must be positive");
  }
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    n /= p;
    if (n % p == 0) {
      return 0;
    }
    sign = -sign;
  }
  if (n > 1) {
    sign = -sign;
  }
  return sign;
}

/// All positive divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("divisors: n must be positive");
  }
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) {
        high.push_back(n / d);
      }
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

inline Natural pow3(unsigned exponent) { return Natural::pow(3, exponent); }

struct HallOrders {
  Natural a1;
  Natural a2;
  Natural a3;
  unsigned m = 1;

  /// a_i for i in {1, 2, 3}.
  const Natural& operator[](int i) const {
    switch (i) {
      case 1:
        return a1;
      case 2:
        return a2;
      case 3:
        return a3;
      default:
        throw std::out_of_range("HallOrders: index must be 1, 2 or 3");
    }
  }
};

inline void require_odd_positive(unsigned m, const char* what) {
  if (m == 0 || m % 2 == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a positive odd integer, got " +
                                std::to_string(m));
  }
}

/// a1 = 3^m + 1, a2 = 3^m - 3^((m+1)/2) + 1, a3 = 3^m + 3^((m+1)/2) + 1.
inline HallOrders hall_orders(unsigned m) {
  require_odd_positive(m, "hall_orders");
  const Natural q = pow3(m);
  const Natural root = pow3((m + 1) / 2);
  return HallOrders{q + 1, q + 1 - root, q + root + 1, m};
}

/// Which of a1(n), a2(n), a3(n) each a_i(l) divides (targets are 1-based).
struct HallRouting {
  unsigned l = 1;
  unsigned n = 1;
  int target_of_a1 = 1;
  int target_of_a2 = 2;
  int target_of_a3 = 3;

  int target(int i) const {
    switch (i) {
      case 1:
        return target_of_a1;
      case 2:
        return target_of_a2;
      case 3:
        return target_of_a3;
      default:
        throw std::out_of_range("HallRouting: index must be 1, 2 or 3");
    }
  }
};

inline void require_divisor_pair(unsigned l, unsigned n, const char* what) {
  require_odd_positive(l, what);
  require_odd_positive(n, what);
  if (n % l != 0) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(l) +
                                " does not divide " + std::to_string(n));
  }
}

/// Routing by the residue of n/l: everything goes to a1 when 3 | n/l,
/// otherwise n/l = ±1 mod 12 keeps (a2, a3) in place and ±5 mod 12 swaps them.
inline HallRouting route_hall_divisibility(unsigned l, unsigned n) {
  require_divisor_pair(l, n, "route_hall_divisibility");
  const unsigned ratio = n / l;
  HallRouting r{l, n, 1, 2, 3};
  if (ratio % 3 == 0) {
    r.target_of_a2 = 1;
    r.target_of_a3 = 1;
    return r;
  }
  const unsigned residue = ratio % 12;
  if (residue == 5 || residue == 7) {
    r.target_of_a2 = 3;
    r.target_of_a3 = 2;
  }
  return r;
}

/// Brute-force witness for the routing: literal divmod of every a_j(n) by
/// every a_i(l) > 1. True iff each such a_i(l) divides exactly one a_j(n) and
/// that j is the routed target.
inline bool verify_unique_divisibility(unsigned l, unsigned n) {
  require_divisor_pair(l, n, "verify_unique_divisibility");
  const HallOrders small = hall_orders(l);
  const HallOrders big = hall_orders(n);
  const HallRouting routing = route_hall_divisibility(l, n);
  for (int i = 1; i <= 3; ++i) {
    if (small[i] == Natural(1)) {
      continue;
    }
    int hits = 0;
    int hit = 0;
    for (int j = 1; j <= 3; ++j) {
      if (Natural::divmod(big[j], small[i]).second.is_zero()) {
        ++hits;
        hit = j;
      }
    }
    if (hits != 1 || hit != routing.target(i)) {
      return false;
    }
  }
  return true;
}

}  // namespace reemobius::numtheory
