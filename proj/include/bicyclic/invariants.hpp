#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bicyclic/group_table.hpp"

namespace bicyclic {

struct InvariantRecord {
  std::size_t order = 1;
  std::size_t center_size = 1;
  std::vector<std::size_t> derived_series_sizes;  // |G|, |G'|, |G''|, ... down to 1
  std::vector<std::size_t> lower_central_sizes;   // |K_1|, |K_2|, ... down to 1
  std::size_t frattini_size = 1;                  // |G' mho_1(G)|
  std::vector<std::size_t> omega_sizes;           // |Omega_1|, |Omega_2|, ... until it is G
  std::vector<std::size_t> agemo_sizes;           // |mho_1|, |mho_2|, ... until trivial
  int rank = 0;       // dim Hom(G, F_2), computed without Phi
  int two_rank = 0;   // largest r with C_2^r <= G
  unsigned exponent = 1;
  int nilpotency_class = 0;
  bool derived_is_cyclic = true;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

InvariantRecord structural_invariants(const GroupTable& G);
InvariantRecord structural_invariants(const SubgroupRef& S);

// dim_F2 Hom(G, F_2) by solving h(xg) = h(x) + h(g) for generators g.
int rank_via_homs(const GroupTable& G);
// log2 |H : Phi(H)| for a 2-group H <= G.
int rank_of(const GroupTable& G, const ElementSet& H);
int nilpotency_class(const GroupTable& G);

struct ShapeTags {
  bool abelian = false;
  bool cyclic = false;
  bool homocyclic = false;
  bool elementary_abelian = false;
  bool dihedral = false;
  bool semidihedral = false;
  bool quaternion = false;
  bool maximal_class = false;
  bool metacyclic = false;
  bool bicyclic = false;
  bool wreath_C2n_C2 = false;
  // Tagged only for the two-generator presentation with central commutator of
  // order 2 that is not metacyclic; D_8 is the one metacyclic member, type (1,1).
  std::optional<std::pair<int, int>> min_nonabelian;

  friend bool operator==(const ShapeTags&, const ShapeTags&) = default;
};

ShapeTags classify_shape(const GroupTable& G);

bool is_metacyclic(const GroupTable& G, const ElementSet& H);
inline bool is_metacyclic(const GroupTable& G) { return is_metacyclic(G, G.all()); }
// G = AB for cyclic A, B.
bool is_bicyclic(const GroupTable& G);
// metacyclic, or rank 2 with exactly one nonmetacyclic maximal subgroup.
bool janko_criterion(const GroupTable& G);

// Exponents e_1 >= e_2 >= ... with H = prod C_{2^e_j}; H must be abelian.
std::vector<int> abelian_invariants(const GroupTable& G, const ElementSet& H);

// Coordinates on H / Phi(H) with respect to a Burnside basis of H.
struct FrattiniCoordinates {
  std::vector<Elem> basis;
  ElementSet phi;
  std::vector<int> coord;  // bitmask per parent element, -1 outside H
};
FrattiniCoordinates frattini_coordinates(const GroupTable& G, const ElementSet& H);

// Index-2 subgroups of a 2-group H, one per nonzero functional on H/Phi(H),
// in increasing functional order.
std::vector<ElementSet> maximal_subgroups(const GroupTable& G, const ElementSet& H);
inline std::vector<ElementSet> maximal_subgroups(const GroupTable& G) {
  return maximal_subgroups(G, G.all());
}

struct Localizers {
  SubgroupRef centralizer;
  SubgroupRef normalizer;
  SubgroupRef core;
};
Localizers localizers(const GroupTable& G, const SubgroupRef& S);

}  // namespace bicyclic
