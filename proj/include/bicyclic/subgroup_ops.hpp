#pragma once

#include <span>
#include <vector>

#include "bicyclic/group_table.hpp"

// Subgroup-valued operations computed inside a parent table. Functions taking
// `H` treat it as a subgroup of G; results are subsets of G. The formulas for
// Frattini and rank assume 2-groups.
namespace bicyclic {

// Least subgroup containing gens, by BFS under right multiplication.
ElementSet closure(const GroupTable& G, std::span<const Elem> gens);
ElementSet closure(const GroupTable& G, const ElementSet& gens);
SubgroupRef generated_subgroup(const GroupTable& G, std::span<const Elem> gens);

ElementSet center(const GroupTable& G, const ElementSet& H);
inline ElementSet center(const GroupTable& G) { return center(G, G.all()); }
// Elements of `within` commuting with every element of S.
ElementSet centralizer(const GroupTable& G, const ElementSet& S, const ElementSet& within);
ElementSet normalizer(const GroupTable& G, const ElementSet& H, const ElementSet& within);
bool is_normal(const GroupTable& G, const ElementSet& H, const ElementSet& in);
inline bool is_normal(const GroupTable& G, const ElementSet& H) { return is_normal(G, H, G.all()); }
// Intersection of the conjugates of H under `by`.
ElementSet core(const GroupTable& G, const ElementSet& H, const ElementSet& by);
ElementSet conjugate(const GroupTable& G, Elem g, const ElementSet& H);

// [A, B]
ElementSet commutator(const GroupTable& G, const ElementSet& A, const ElementSet& B);
ElementSet derived(const GroupTable& G, const ElementSet& H);
// <h^(2^k) : h in H>
ElementSet agemo(const GroupTable& G, const ElementSet& H, int k);
// <h in H : h^(2^k) = 1>
ElementSet omega(const GroupTable& G, const ElementSet& H, int k);
// <h^2 : h in H>, which is the Frattini subgroup when H is a 2-group.
ElementSet frattini(const GroupTable& G, const ElementSet& H);

// Burnside basis of a 2-group H: scan elements by descending order, then
// ascending index, keeping those outside <kept, Phi(H)>. Its length is the rank.
std::vector<Elem> minimal_generators(const GroupTable& G, const ElementSet& H);
inline std::vector<Elem> minimal_generators(const GroupTable& G) {
  return minimal_generators(G, G.all());
}

bool is_cyclic(const GroupTable& G, const ElementSet& H);

// Conjugacy classes of elements, ordered by least member; each class sorted.
struct ElementClasses {
  std::vector<std::vector<Elem>> classes;
  std::vector<int> class_of;
};
ElementClasses element_classes(const GroupTable& G);

}  // namespace bicyclic
