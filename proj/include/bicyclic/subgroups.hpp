#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "bicyclic/group_table.hpp"

namespace bicyclic {

inline constexpr std::size_t kDefaultSubgroupBudget = 50000;

struct SubgroupLattice {
  const GroupTable* group = nullptr;
  // Sorted by order, then lexicographically by sorted element list.
  std::vector<ElementSet> subgroups;
  // order -> indices into `subgroups`
  std::map<std::size_t, std::vector<std::size_t>> by_order;

  SubgroupRef ref(std::size_t k) const { return SubgroupRef::trusted(*group, subgroups[k]); }
  std::size_t size() const noexcept { return subgroups.size(); }
};

struct SubgroupClass {
  std::vector<std::size_t> members;  // lattice indices, ascending
  std::size_t representative;        // lexicographically least member
};

// Throws kBudgetExceeded once more than `budget` subgroups have been found.
SubgroupLattice all_subgroups(const GroupTable& G, std::size_t budget = kDefaultSubgroupBudget);

// Conjugation orbits, ordered like their representatives in the lattice.
std::vector<SubgroupClass> subgroup_conjugacy_classes(const GroupTable& G, const SubgroupLattice& L);

// Lexicographic order on sorted element lists.
bool lex_less(const ElementSet& a, const ElementSet& b);

}  // namespace bicyclic
