#include "bicyclic/numtheory.hpp"

#include <map>
#include <mutex>

#include "bicyclic/error.hpp"

namespace bicyclic {

namespace {

BigInt pow2(unsigned k) { return BigInt(1) << k; }

BigInt gcd(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

BigInt odd_part(const ExponentFamily f, unsigned n) {
  switch (f) {
    case ExponentFamily::kSL2: return pow2(2 * n) - 1;
    case ExponentFamily::kSz: return pow2(4 * n - 2) + 1;
    case ExponentFamily::kPSU3: return group_exponent(f, n).value;
    case ExponentFamily::kGL2: break;
  }
  return 1;
}

unsigned smallest_n(ExponentFamily f) { return f == ExponentFamily::kSL2 ? 1 : 2; }

unsigned largest_allowed(ExponentFamily f, unsigned r) {
  switch (f) {
    case ExponentFamily::kSL2: return r / 2;
    case ExponentFamily::kSz: return (r + 4) / 8;
    case ExponentFamily::kPSU3: return r / 6;
    case ExponentFamily::kGL2: break;
  }
  return 0;
}

}  // namespace

BigInt phi_at_2(unsigned d) {
  if (d == 0) throw Error(ErrorCode::kOutOfRange, "phi_at_2 needs d >= 1");
  static std::mutex mu;
  static std::map<unsigned, BigInt> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
  }
  BigInt v = pow2(d) - 1;
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) v /= phi_at_2(e);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(d, v);
  return v;
}

unsigned euler_phi(unsigned n) {
  unsigned out = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

BigInt mersenne_lcm(unsigned r) {
  BigInt l = 1;
  for (unsigned i = 1; i <= r; ++i) {
    const BigInt t = pow2(i) - 1;
    l = l / gcd(l, t) * t;
  }
  return l;
}

std::string to_string(ExponentFamily f) {
  switch (f) {
    case ExponentFamily::kGL2: return "GL2";
    case ExponentFamily::kSL2: return "SL2";
    case ExponentFamily::kSz: return "Sz";
    case ExponentFamily::kPSU3: return "PSU3";
  }
  return "?";
}

std::optional<ExponentFamily> exponent_family_from_string(const std::string& s) {
  for (ExponentFamily f : {ExponentFamily::kGL2, ExponentFamily::kSL2, ExponentFamily::kSz, ExponentFamily::kPSU3})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

ExponentFormula group_exponent(ExponentFamily family, unsigned p) {
  ExponentFormula out{family, p, 0, false};
  auto need = [&](unsigned lo, unsigned hi) {
    if (p < lo || p > hi)
      throw Error(ErrorCode::kOutOfRange, to_string(family) + " parameter must lie in [" + std::to_string(lo) +
                                              ", " + std::to_string(hi) + "], got " + std::to_string(p));
  };
  switch (family) {
    case ExponentFamily::kGL2: {
      need(1, 4096);
      unsigned c = 0;
      while ((1u << c) < p) ++c;
      out.value = pow2(c) * mersenne_lcm(p);
      break;
    }
    case ExponentFamily::kSL2:
      need(1, 4096);
      out.value = 2 * (pow2(2 * p) - 1);
      break;
    case ExponentFamily::kSz:
      need(2, 4096);
      out.value = 4 * (pow2(2 * p - 1) - 1) * (pow2(4 * p - 2) + 1);
      break;
    case ExponentFamily::kPSU3: {
      need(2, 4096);
      const BigInt g = gcd(pow2(p) + 1, 3);
      out.value = (pow2(2 * p) - pow2(p) + 1) / g;
      out.is_divisor = true;
      break;
    }
  }
  return out;
}

SectionBoundReport section_bound_verify(ExponentFamily family, unsigned r_max) {
  if (family == ExponentFamily::kGL2) throw Error(ErrorCode::kOutOfRange, "section bounds exist for SL2, Sz, PSU3");
  if (r_max < 1 || r_max > 64) throw Error(ErrorCode::kOutOfRange, "r_max must lie in [1, 64]");
  SectionBoundReport rep{family, r_max, {}, {}, true};
  for (unsigned r = 1; r <= r_max; ++r) {
    const BigInt L = mersenne_lcm(r);
    SectionScanRow row;
    row.r = r;
    row.largest_allowed = largest_allowed(family, r);
    if (row.largest_allowed < smallest_n(family)) row.largest_allowed = 0;
    for (unsigned n = smallest_n(family); n <= r; ++n) {
      const bool divides = L % odd_part(family, n) == 0;
      if (divides) row.largest_unobstructed = n;
      if (divides && n > row.largest_allowed)
        rep.failures.push_back(to_string(family) + ": n=" + std::to_string(n) + " not obstructed at r=" +
                               std::to_string(r));
    }
    if (row.largest_unobstructed.value_or(0) != row.largest_allowed) rep.bounds_tight = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace bicyclic
