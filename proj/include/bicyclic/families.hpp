#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicyclic/group_table.hpp"

namespace bicyclic {

enum class Family {
  kCyclic,           // C_{2^n}
  kHomocyclic,       // C_{2^n} x C_{2^n}
  kDihedral,         // D_{2^n}, order 2^n
  kQuaternion,       // Q_{2^n}, order 2^n
  kSemidihedral,     // SD_{2^n}, order 2^n
  kModular,          // M_{2^n}, order 2^n
  kWreath,           // C_{2^n} wr C_2
  kMinNonabelian,    // type (r, s) = (n, m)
  kDirectC2mxC2sq,   // C_{2^m} x C_2^2
  kDirectC2mxQ8,     // C_{2^m} x Q_8
  kCentralC2mQ8,     // C_{2^m} * Q_8
  kJanko,            // <v, x, a> with parameters n, m, i, x_sq, a_pow
};

// One presentation. Unused parameters stay zero.
//
// janko: v^(2^n) = 1, x v x^-1 = v^-1, x^2 = z^x_sq, a^(2^m) = z^a_pow,
//        a v a^-1 = v^(-1+2^i), a x a^-1 = v x, where z = v^(2^(n-1)).
//        Requires n >= 2, m >= 1, max(2, n-m+1) <= i <= n.
struct FamilySpec {
  Family family = Family::kCyclic;
  int n = 0;
  int m = 0;
  int i = 0;
  int x_sq = 0;
  int a_pow = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);
// e.g. "janko(n=2,m=2,i=2,x_sq=0,a_pow=0)" or "dihedral(order=2^4)"
std::string describe(const FamilySpec& spec);

// Throws kBadParameters for a violated parameter constraint and
// kOrderTooLarge beyond 2^8.
void validate(const FamilySpec& spec);
// log2 of the order the presentation defines. Assumes a valid spec.
int predicted_log_order(const FamilySpec& spec);

// Normal-form tables. Cyclic-extension families enumerate elements
// lexicographically by their exponent tuple (e.g. v^e x^f a^g), so the
// output is reproducible byte for byte.
GroupTable construct_family(const FamilySpec& spec);

// Every valid spec whose group has order 2^N, in a fixed order.
std::vector<FamilySpec> family_specs_of_order(int N);

// C_{2^n}; element k is g^k.
GroupTable cyclic_group(int n);

// G * H identifying the order-2 subgroups <zg> and <zh> (both central involutions).
GroupTable amalgamate_involutions(const GroupTable& G, Elem zg, const GroupTable& H, Elem zh);

}  // namespace bicyclic
