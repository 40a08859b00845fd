#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bicyclic/group_table.hpp"

namespace bicyclic {

// Isomorphism invariant; equal fingerprints are necessary, never sufficient.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::pair<unsigned, std::size_t>> element_orders;  // (order, count)
  std::size_t center_size = 0;
  std::vector<std::size_t> derived_series_sizes;
  std::vector<std::size_t> omega_sizes;
  std::vector<std::size_t> agemo_sizes;
  std::vector<std::pair<std::size_t, std::size_t>> class_sizes;  // (size, count)
  // One entry per conjugacy class: (class size, element order, #{x : x^2 in class}).
  std::vector<std::tuple<std::size_t, unsigned, std::size_t>> power_profile;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  // FNV-1a over a canonical text rendering, as 16 hex digits.
  std::string digest() const;
  std::string canonical_text() const;
};

Fingerprint fingerprint(const GroupTable& G);

// witness[g] is the image in H of element g of G.
struct IsoWitness {
  std::vector<Elem> map;
};

std::optional<IsoWitness> isomorphic(const GroupTable& G, const GroupTable& H);
// Skips the fingerprint comparison; callers that bucket by fingerprint use this.
std::optional<IsoWitness> find_isomorphism(const GroupTable& G, const GroupTable& H);

// True iff `map` is a bijective homomorphism G -> H (checked on all pairs).
bool is_isomorphism(const GroupTable& G, const GroupTable& H, const std::vector<Elem>& map);

inline constexpr std::uint64_t kStoredAutLimit = 10000;

struct AutGroup {
  std::uint64_t order = 0;
  std::vector<std::vector<Elem>> generators;  // permutations of element indices
  std::vector<std::vector<Elem>> elements;    // filled only when order <= kStoredAutLimit
  bool is_2_group = false;
};

// Calls visit(alpha) for every automorphism, in a fixed order (identity first
// is not guaranteed). Stop early by returning false. Throws kRankTooHigh for
// rank > 3 and kOrderTooLarge above order 128.
void for_each_automorphism(const GroupTable& Q, const std::function<bool(const std::vector<Elem>&)>& visit);

AutGroup automorphisms(const GroupTable& Q);

// Elements fixed by alpha.
ElementSet fixed_points(const std::vector<Elem>& alpha);

}  // namespace bicyclic
