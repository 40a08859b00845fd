#include "bicyclic/subgroup_ops.hpp"

#include <algorithm>

namespace bicyclic {

ElementSet closure(const GroupTable& G, std::span<const Elem> gens) {
  ElementSet reached;
  reached.set(G.identity());
  std::vector<Elem> frontier{G.identity()};
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (Elem s : gens) {
      Elem y = G.mul(x, s);
      if (!reached.test(y)) {
        reached.set(y);
        frontier.push_back(y);
      }
    }
  }
  return reached;
}

ElementSet closure(const GroupTable& G, const ElementSet& gens) {
  // Feeding only elements not yet reached keeps the generator list short.
  ElementSet reached;
  reached.set(G.identity());
  std::vector<Elem> chosen;
  for (Elem g : to_vector(gens)) {
    if (reached.test(g)) continue;
    chosen.push_back(g);
    reached = closure(G, std::span<const Elem>(chosen));
  }
  return reached;
}

SubgroupRef generated_subgroup(const GroupTable& G, std::span<const Elem> gens) {
  return SubgroupRef::trusted(G, closure(G, gens));
}

ElementSet center(const GroupTable& G, const ElementSet& H) {
  return centralizer(G, H, H);
}

ElementSet centralizer(const GroupTable& G, const ElementSet& S, const ElementSet& within) {
  const std::vector<Elem> s = to_vector(S);
  ElementSet out;
  for (Elem g : to_vector(within)) {
    bool ok = true;
    for (Elem x : s) {
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    }
    if (ok) out.set(g);
  }
  return out;
}

ElementSet normalizer(const GroupTable& G, const ElementSet& H, const ElementSet& within) {
  const std::vector<Elem> h = to_vector(H);
  ElementSet out;
  for (Elem g : to_vector(within)) {
    if (H.test(g)) {
      out.set(g);
      continue;
    }
    bool ok = true;
    for (Elem x : h) {
      if (!H.test(G.conj(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.set(g);
  }
  return out;
}

bool is_normal(const GroupTable& G, const ElementSet& H, const ElementSet& in) {
  return (normalizer(G, H, in) == in);
}

ElementSet conjugate(const GroupTable& G, Elem g, const ElementSet& H) {
  ElementSet out;
  for (Elem x : to_vector(H)) out.set(G.conj(g, x));
  return out;
}

ElementSet core(const GroupTable& G, const ElementSet& H, const ElementSet& by) {
  ElementSet out = H;
  for (Elem g : to_vector(by)) out &= conjugate(G, g, H);
  return out;
}

ElementSet commutator(const GroupTable& G, const ElementSet& A, const ElementSet& B) {
  ElementSet comms;
  const std::vector<Elem> b = to_vector(B);
  for (Elem x : to_vector(A))
    for (Elem y : b) comms.set(G.comm(x, y));
  return closure(G, comms);
}

ElementSet derived(const GroupTable& G, const ElementSet& H) { return commutator(G, H, H); }

ElementSet agemo(const GroupTable& G, const ElementSet& H, int k) {
  ElementSet powers;
  for (Elem x : to_vector(H)) powers.set(G.pow(x, 1LL << k));
  return closure(G, powers);
}

ElementSet omega(const GroupTable& G, const ElementSet& H, int k) {
  ElementSet roots;
  for (Elem x : to_vector(H))
    if (G.pow(x, 1LL << k) == G.identity()) roots.set(x);
  return closure(G, roots);
}

ElementSet frattini(const GroupTable& G, const ElementSet& H) {
  // In a 2-group the squares already generate Phi.
  ElementSet squares;
  for (Elem x : to_vector(H)) squares.set(G.mul(x, x));
  return closure(G, squares);
}

std::vector<Elem> minimal_generators(const GroupTable& G, const ElementSet& H) {
  std::vector<Elem> elems = to_vector(H);
  ElementSet squares;
  for (Elem x : elems) squares.set(G.mul(x, x));
  // For 2-groups the squares already generate the Frattini subgroup.
  ElementSet span = closure(G, squares);
  std::stable_sort(elems.begin(), elems.end(),
                   [&](Elem a, Elem b) { return G.elem_order(a) > G.elem_order(b); });
  std::vector<Elem> gens;
  for (Elem x : elems) {
    if (span.test(x)) continue;
    gens.push_back(x);
    ElementSet seed = span;
    seed.set(x);
    span = closure(G, seed);
    if (span == H) break;
  }
  return gens;
}

bool is_cyclic(const GroupTable& G, const ElementSet& H) {
  const std::size_t n = H.count();
  for (Elem x : to_vector(H))
    if (G.elem_order(x) == n) return true;
  return false;
}

ElementClasses element_classes(const GroupTable& G) {
  ElementClasses out;
  const std::size_t n = G.order();
  out.class_of.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (out.class_of[x] >= 0) continue;
    const int id = int(out.classes.size());
    std::vector<Elem> cls;
    for (std::size_t g = 0; g < n; ++g) {
      Elem y = G.conj(Elem(g), Elem(x));
      if (out.class_of[y] < 0) {
        out.class_of[y] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace bicyclic
