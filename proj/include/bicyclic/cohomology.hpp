#pragma once

#include <vector>

#include "bicyclic/gf2.hpp"
#include "bicyclic/group_table.hpp"

namespace bicyclic {

inline constexpr int kDefaultH2Cap = 16;

// Normalized 2-cocycles G x G -> F_2 as bit vectors of length |G|^2, with
// f(a, b) at index a * |G| + b.
struct CocycleBasis {
  GroupTable base_group;
  std::vector<gf2::BitVector> z2_basis;
  std::vector<gf2::BitVector> b2_basis;
  // Complement of B^2 in Z^2, each vector reduced modulo B^2.
  std::vector<gf2::BitVector> h2_basis;
  int h2_dim = 0;
};

// Requires |G| <= 128.
CocycleBasis cocycle_space(const GroupTable& G);

// (a, s)(b, t) = (ab, s + t + f(a, b)); element (a, s) has index 2a + s.
GroupTable extension_by_cocycle(const GroupTable& G, const gf2::BitVector& f);

// One extension per class of H^2, classes enumerated as bit masks over
// h2_basis in increasing order. Throws kH2TooLarge when h2_dim > h2_cap.
std::vector<GroupTable> central_extensions(const GroupTable& G, int h2_cap = kDefaultH2Cap);

// H^2 class representatives in the same order central_extensions uses.
std::vector<gf2::BitVector> h2_representatives(const CocycleBasis& basis);

}  // namespace bicyclic
