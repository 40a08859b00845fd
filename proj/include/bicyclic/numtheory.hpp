#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bicyclic {

using BigInt = boost::multiprecision::cpp_int;

// Phi_d(2) via (2^d - 1) / prod_{e | d, e < d} Phi_e(2). Memoized. d >= 1.
BigInt phi_at_2(unsigned d);
unsigned euler_phi(unsigned n);

// lcm{2^i - 1 : 1 <= i <= r}, the odd part of the exponent of GL(r, 2).
BigInt mersenne_lcm(unsigned r);

enum class ExponentFamily { kGL2, kSL2, kSz, kPSU3 };
std::string to_string(ExponentFamily f);
std::optional<ExponentFamily> exponent_family_from_string(const std::string& s);

struct ExponentFormula {
  ExponentFamily family;
  unsigned param;
  BigInt value;
  // PSU3 yields a divisor of the exponent, not the exponent itself.
  bool is_divisor = false;
};

// GL2: exponent of GL(r, 2), r >= 1.   SL2: exponent of SL(2, 2^n), n >= 1.
// Sz: exponent of Sz(2^(2n-1)), n >= 2. PSU3: odd divisor of the exponent of PSU(3, 2^n), n >= 2.
// Throws kOutOfRange.
ExponentFormula group_exponent(ExponentFamily family, unsigned param);

struct SectionScanRow {
  unsigned r = 0;
  unsigned largest_allowed = 0;                 // largest n the bound permits (0: none)
  std::optional<unsigned> largest_unobstructed;  // largest scanned n without an obstruction
};

struct SectionBoundReport {
  ExponentFamily family;
  unsigned r_max = 0;
  std::vector<SectionScanRow> rows;
  // n beyond the bound whose odd part still divides lcm{2^i - 1 : i <= r}.
  std::vector<std::string> failures;
  // Every r where largest_unobstructed == largest_allowed.
  bool bounds_tight = true;
};

// For each r <= r_max and n up to r, checks that the odd part attached to the
// simple group (2^(2n) - 1, 2^(4n-2) + 1, (2^(2n) - 2^n + 1) / gcd(2^n + 1, 3))
// fails to divide lcm{2^i - 1 : i <= r} whenever n exceeds the bound
// (2n <= r, 8n - 4 <= r, 6n <= r). r_max <= 64; GL2 is rejected.
SectionBoundReport section_bound_verify(ExponentFamily family, unsigned r_max);

}  // namespace bicyclic
