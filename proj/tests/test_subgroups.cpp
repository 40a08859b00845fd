#include "doctest.h"

#include <algorithm>

#include "bicyclic/error.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/subgroup_ops.hpp"
#include "bicyclic/subgroups.hpp"
#include "oracles.hpp"

using namespace bicyclic;

namespace {

GroupTable build(Family f, int n, int m = 0) { return construct_family(FamilySpec{f, n, m}); }

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.count() != b.count() ? a.count() < b.count() : lex_less(a, b);
  });
  return v;
}

std::vector<GroupTable> small_groups() {
  std::vector<GroupTable> out;
  for (int N = 1; N <= 4; ++N)
    for (const FamilySpec& s : family_specs_of_order(N)) out.push_back(construct_family(s));
  out.push_back(direct_product(direct_product(cyclic_group(1), cyclic_group(1)), cyclic_group(1)));
  out.push_back(direct_product(build(Family::kDihedral, 3), cyclic_group(1)));
  return out;
}

}  // namespace

TEST_CASE("subgroup counts of the small standard groups") {
  CHECK(all_subgroups(build(Family::kQuaternion, 3)).size() == 6);
  CHECK(all_subgroups(build(Family::kDihedral, 3)).size() == 10);
  CHECK(all_subgroups(direct_product(cyclic_group(2), cyclic_group(1))).size() == 8);
}

TEST_CASE("lattice equals exhaustive subset search up to order 16") {
  for (const GroupTable& G : small_groups()) {
    CAPTURE(G.order());
    const SubgroupLattice L = all_subgroups(G);
    CHECK(L.subgroups == sorted(oracle::subgroups(G)));
  }
}

TEST_CASE("lattice layers are linked and respect Lagrange") {
  for (int N = 1; N <= 6; ++N)
    for (const FamilySpec& s : family_specs_of_order(N)) {
      const GroupTable G = construct_family(s);
      const SubgroupLattice L = all_subgroups(G);
      CHECK(L.subgroups.front().count() == 1);
      CHECK(L.subgroups.back() == G.all());
      for (const auto& [ord, idx] : L.by_order) {
        CHECK(G.order() % ord == 0);
        if (ord == 1) continue;
        for (std::size_t k : idx) {
          bool linked = false;
          for (std::size_t j : L.by_order.at(ord / 2))
            if ((L.subgroups[j] & ~L.subgroups[k]).none()) linked = true;
          CHECK(linked);
        }
      }
    }
}

TEST_CASE("conjugacy classes partition the lattice") {
  for (int N = 1; N <= 6; ++N)
    for (const FamilySpec& s : family_specs_of_order(N)) {
      const GroupTable G = construct_family(s);
      const SubgroupLattice L = all_subgroups(G);
      const auto classes = subgroup_conjugacy_classes(G, L);
      std::vector<int> seen(L.size(), 0);
      std::size_t total = 0;
      for (const SubgroupClass& c : classes) {
        total += c.members.size();
        CHECK(G.order() % c.members.size() == 0);
        CHECK(c.representative == c.members.front());
        const InvariantRecord r0 = structural_invariants(L.ref(c.representative));
        for (std::size_t m : c.members) {
          ++seen[m];
          CHECK(L.subgroups[m].count() == L.subgroups[c.representative].count());
          CHECK(structural_invariants(L.ref(m)) == r0);
        }
        // Members are exactly the conjugates of the representative.
        std::vector<std::size_t> conj;
        for (std::size_t g = 0; g < G.order(); ++g) {
          const ElementSet C = conjugate(G, Elem(g), L.subgroups[c.representative]);
          conj.push_back(std::size_t(std::find(L.subgroups.begin(), L.subgroups.end(), C) - L.subgroups.begin()));
        }
        std::sort(conj.begin(), conj.end());
        conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
        CHECK(conj == c.members);
      }
      CHECK(total == L.size());
      CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
    }
}

TEST_CASE("class structure examples") {
  const GroupTable D8 = build(Family::kDihedral, 3);
  const SubgroupLattice L8 = all_subgroups(D8);
  std::size_t klein_classes = 0;
  for (const SubgroupClass& c : subgroup_conjugacy_classes(D8, L8)) {
    const ElementSet& H = L8.subgroups[c.representative];
    if (H.count() == 4 && !is_cyclic(D8, H)) {
      ++klein_classes;
      CHECK(c.members.size() == 1);
    }
  }
  CHECK(klein_classes == 2);

  const GroupTable D16 = build(Family::kDihedral, 4);
  const SubgroupLattice L16 = all_subgroups(D16);
  const ElementSet Z = center(D16);
  std::size_t involution_classes = 0;
  for (const SubgroupClass& c : subgroup_conjugacy_classes(D16, L16)) {
    const ElementSet& H = L16.subgroups[c.representative];
    if (H.count() == 2 && (H & ~Z).any()) ++involution_classes;
  }
  CHECK(involution_classes == 2);

  // Q16 has two conjugacy classes of Q8 subgroups; both are normal.
  const GroupTable Q16 = build(Family::kQuaternion, 4);
  const GroupTable Q8 = build(Family::kQuaternion, 3);
  const SubgroupLattice LQ = all_subgroups(Q16);
  std::size_t q8_classes = 0;
  for (const SubgroupClass& c : subgroup_conjugacy_classes(Q16, LQ)) {
    const ElementSet& H = LQ.subgroups[c.representative];
    if (H.count() != 8) continue;
    if (oracle::isomorphism_count(induced(Q16, H).table, Q8) == 0) continue;
    ++q8_classes;
    CHECK(c.members.size() == 1);
  }
  CHECK(q8_classes == 2);
}

TEST_CASE("subgroup budget is enforced") {
  const GroupTable E = direct_product(direct_product(cyclic_group(1), cyclic_group(1)),
                                      direct_product(cyclic_group(1), cyclic_group(1)));
  try {
    all_subgroups(E, 10);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
  CHECK(all_subgroups(E).size() == 67);
}
