#include "bicyclic/subgroups.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bicyclic/error.hpp"
#include "bicyclic/subgroup_ops.hpp"

namespace bicyclic {

namespace {
struct SetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return std::hash<ElementSet>{}(s); }
};
}  // namespace

bool lex_less(const ElementSet& a, const ElementSet& b) {
  const ElementSet diff = a ^ b;
  if (diff.none()) return false;
  const std::size_t d = diff._Find_first();
  // Both lists agree below d. If d is in a, a wins unless b has run out.
  const ElementSet& owner = a.test(d) ? a : b;
  const ElementSet& other = a.test(d) ? b : a;
  const bool other_has_more = other._Find_next(d) < kMaxOrder;
  const bool owner_first = other_has_more;
  return (&owner == &a) == owner_first;
}

SubgroupLattice all_subgroups(const GroupTable& G, std::size_t budget) {
  SubgroupLattice L;
  L.group = &G;
  const ElementSet all = G.all();
  std::vector<ElementSet> layer;
  ElementSet trivial;
  trivial.set(G.identity());
  layer.push_back(trivial);
  std::size_t total = 1;
  while (!layer.empty()) {
    for (const ElementSet& H : layer) L.subgroups.push_back(H);
    if (layer.front().count() == G.order()) break;
    std::unordered_set<ElementSet, SetHash> next;
    std::vector<ElementSet> ordered;
    for (const ElementSet& H : layer) {
      const ElementSet N = normalizer(G, H, all);
      const std::vector<Elem> hs = to_vector(H);
      ElementSet done = H;
      for (Elem g : to_vector(N)) {
        if (done.test(g) || !H.test(G.mul(g, g))) continue;
        ElementSet S = H;
        for (Elem h : hs) S.set(G.mul(g, h));
        done |= S;
        if (next.insert(S).second) {
          ordered.push_back(S);
          if (++total > budget) {
            throw Error(ErrorCode::kBudgetExceeded,
                        "more than " + std::to_string(budget) + " subgroups");
          }
        }
      }
    }
    std::sort(ordered.begin(), ordered.end(), lex_less);
    layer = std::move(ordered);
  }
  for (std::size_t k = 0; k < L.subgroups.size(); ++k) L.by_order[L.subgroups[k].count()].push_back(k);
  return L;
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(const GroupTable& G, const SubgroupLattice& L) {
  std::unordered_map<ElementSet, std::size_t, SetHash> index;
  for (std::size_t k = 0; k < L.size(); ++k) index.emplace(L.subgroups[k], k);
  std::vector<bool> assigned(L.size(), false);
  std::vector<SubgroupClass> out;
  for (std::size_t k = 0; k < L.size(); ++k) {
    if (assigned[k]) continue;
    SubgroupClass c;
    c.representative = k;
    for (std::size_t g = 0; g < G.order(); ++g) {
      const std::size_t j = index.at(conjugate(G, Elem(g), L.subgroups[k]));
      if (!assigned[j]) {
        assigned[j] = true;
        c.members.push_back(j);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace bicyclic
