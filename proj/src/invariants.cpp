#include "bicyclic/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "bicyclic/gf2.hpp"
#include "bicyclic/subgroup_ops.hpp"

namespace bicyclic {

namespace {

struct SetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return std::hash<ElementSet>{}(s); }
};

int largest_elementary_abelian(const GroupTable& G) {
  std::vector<Elem> inv;
  for (std::size_t x = 0; x < G.order(); ++x)
    if (G.elem_order(Elem(x)) == 2) inv.push_back(Elem(x));
  int best = 0;
  std::vector<Elem> chosen;
  std::function<void(const ElementSet&, std::size_t)> dfs = [&](const ElementSet& E, std::size_t start) {
    best = std::max(best, int(chosen.size()));
    for (std::size_t k = start; k < inv.size(); ++k) {
      const Elem t = inv[k];
      if (E.test(t)) continue;
      bool commutes = true;
      for (Elem c : chosen) commutes = commutes && G.mul(c, t) == G.mul(t, c);
      if (!commutes) continue;
      ElementSet next = E;
      for (Elem e : to_vector(E)) next.set(G.mul(e, t));
      chosen.push_back(t);
      dfs(next, k + 1);
      chosen.pop_back();
    }
  };
  ElementSet start;
  start.set(G.identity());
  dfs(start, 0);
  return best;
}

std::vector<ElementSet> cyclic_subgroups(const GroupTable& G, const ElementSet& H) {
  std::vector<ElementSet> out;
  std::unordered_set<ElementSet, SetHash> seen;
  for (Elem x : to_vector(H)) {
    ElementSet c;
    Elem y = G.identity();
    do {
      c.set(y);
      y = G.mul(y, x);
    } while (y != G.identity());
    if (seen.insert(c).second) out.push_back(c);
  }
  return out;
}

bool quotient_is_cyclic(const GroupTable& G, const ElementSet& H, const ElementSet& N) {
  const std::size_t index = H.count() / N.count();
  if (index == 1) return true;
  for (Elem h : to_vector(H))
    if (!N.test(G.pow(h, (long long)(index / 2)))) return true;
  return false;
}

// D_8 is the only group of order 8 with five involutions.
bool is_D8(const GroupTable& G) {
  if (G.order() != 8) return false;
  int inv = 0;
  for (std::size_t x = 0; x < 8; ++x) inv += G.elem_order(Elem(x)) == 2;
  return inv == 5;
}

bool is_wreath(const GroupTable& G, const std::vector<ElementSet>& maximals) {
  for (const ElementSet& A : maximals) {
    if (centralizer(G, A, A) != A) continue;
    auto inv = abelian_invariants(G, A);
    if (inv.size() != 2 || inv[0] != inv[1] || inv[0] < 1) continue;
    const unsigned top = 1u << inv[0];
    for (std::size_t t = 0; t < G.order(); ++t) {
      if (A.test(t) || G.elem_order(Elem(t)) != 2) continue;
      for (Elem a : to_vector(A)) {
        if (G.elem_order(a) != top) continue;
        // <a> and <t a t> both have order 2^n; they span A iff they meet trivially.
        const ElementSet ca = closure(G, std::span<const Elem>(&a, 1));
        const Elem b = G.conj(Elem(t), a);
        const ElementSet cb = closure(G, std::span<const Elem>(&b, 1));
        const bool meet = (ca & cb).count() > 1;
        if (!meet) return true;
      }
    }
  }
  return false;
}

}  // namespace

int rank_via_homs(const GroupTable& G) {
  const std::size_t n = G.order();
  std::vector<Elem> gens;
  ElementSet reached;
  reached.set(G.identity());
  for (std::size_t g = 0; g < n; ++g) {
    if (reached.test(g)) continue;
    gens.push_back(Elem(g));
    reached = closure(G, std::span<const Elem>(gens));
  }
  std::vector<gf2::BitVector> rows;
  for (std::size_t x = 0; x < n; ++x) {
    for (Elem g : gens) {
      gf2::BitVector r(n);
      r.flip(G.mul(Elem(x), g));
      r.flip(x);
      r.flip(g);
      if (!r.none()) rows.push_back(std::move(r));
    }
  }
  gf2::BitVector id(n);
  id.set(G.identity());
  rows.push_back(id);
  return int(gf2::nullspace(rows, n).size());
}

int rank_of(const GroupTable& G, const ElementSet& H) {
  return log2_exact(H.count() / frattini(G, H).count());
}

int nilpotency_class(const GroupTable& G) {
  ElementSet K = G.all();
  int c = 0;
  while (K.count() > 1) {
    ElementSet next = commutator(G, K, G.all());
    if (next == K) return -1;  // not nilpotent
    K = next;
    ++c;
  }
  return c;
}

InvariantRecord structural_invariants(const GroupTable& G) {
  InvariantRecord r;
  const ElementSet all = G.all();
  r.order = G.order();
  r.center_size = center(G).count();

  ElementSet D = all;
  r.derived_series_sizes.push_back(D.count());
  while (D.count() > 1) {
    ElementSet next = derived(G, D);
    if (next == D) break;
    D = next;
    r.derived_series_sizes.push_back(D.count());
  }
  const ElementSet Gp = r.derived_series_sizes.size() > 1 ? derived(G, all) : ElementSet().set(G.identity());
  r.derived_is_cyclic = is_cyclic(G, Gp);

  ElementSet K = all;
  r.lower_central_sizes.push_back(K.count());
  while (K.count() > 1) {
    ElementSet next = commutator(G, K, all);
    if (next == K) break;
    K = next;
    r.lower_central_sizes.push_back(K.count());
  }
  r.nilpotency_class = K.count() == 1 ? int(r.lower_central_sizes.size()) - 1 : -1;

  ElementSet phi = agemo(G, all, 1);
  phi |= Gp;
  r.frattini_size = closure(G, phi).count();

  for (int k = 1;; ++k) {
    r.omega_sizes.push_back(omega(G, all, k).count());
    if (r.omega_sizes.back() == G.order()) break;
  }
  for (int k = 1;; ++k) {
    r.agemo_sizes.push_back(agemo(G, all, k).count());
    if (r.agemo_sizes.back() == 1) break;
  }
  r.rank = rank_via_homs(G);
  r.two_rank = largest_elementary_abelian(G);
  unsigned e = 1;
  for (std::size_t x = 0; x < G.order(); ++x) e = std::lcm(e, G.elem_order(Elem(x)));
  r.exponent = e;
  return r;
}

InvariantRecord structural_invariants(const SubgroupRef& S) {
  return structural_invariants(induced(S).table);
}

std::vector<int> abelian_invariants(const GroupTable& G, const ElementSet& H) {
  // In an abelian group |Omega_k| = prod 2^min(e_j, k), so successive
  // differences count the factors with e_j >= k.
  std::vector<int> at_least;  // at_least[k-1] = #{j : e_j >= k}
  int prev = 0;
  for (int k = 1;; ++k) {
    std::size_t c = 0;
    for (Elem x : to_vector(H))
      if (G.pow(x, 1LL << k) == G.identity()) ++c;
    const int lg = log2_exact(c);
    if (lg == prev) break;
    at_least.push_back(lg - prev);
    prev = lg;
  }
  std::vector<int> exps;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int here = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (int j = 0; j < here; ++j) exps.push_back(int(k) + 1);
  }
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

FrattiniCoordinates frattini_coordinates(const GroupTable& G, const ElementSet& H) {
  FrattiniCoordinates fc;
  fc.basis = minimal_generators(G, H);
  fc.phi = frattini(G, H);
  fc.coord.assign(G.order(), -1);
  const std::vector<Elem> phi = to_vector(fc.phi);
  const std::size_t r = fc.basis.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
    Elem w = G.identity();
    for (std::size_t j = 0; j < r; ++j)
      if (mask >> j & 1) w = G.mul(w, fc.basis[j]);
    for (Elem f : phi) fc.coord[G.mul(w, f)] = int(mask);
  }
  return fc;
}

std::vector<ElementSet> maximal_subgroups(const GroupTable& G, const ElementSet& H) {
  FrattiniCoordinates fc = frattini_coordinates(G, H);
  const std::size_t r = fc.basis.size();
  std::vector<ElementSet> out;
  for (std::size_t lambda = 1; lambda < (std::size_t(1) << r); ++lambda) {
    ElementSet M;
    for (Elem h : to_vector(H))
      if ((std::popcount(unsigned(fc.coord[h]) & unsigned(lambda)) & 1) == 0) M.set(h);
    out.push_back(M);
  }
  return out;
}

bool is_metacyclic(const GroupTable& G, const ElementSet& H) {
  if (rank_of(G, H) > 2) return false;
  for (const ElementSet& N : cyclic_subgroups(G, H)) {
    if (!is_normal(G, N, H)) continue;
    if (quotient_is_cyclic(G, H, N)) return true;
  }
  return false;
}

bool is_bicyclic(const GroupTable& G) {
  if (rank_of(G, G.all()) > 2) return false;
  std::vector<ElementSet> cyc = cyclic_subgroups(G, G.all());
  std::vector<ElementSet> maximal;
  for (const ElementSet& c : cyc) {
    bool contained = false;
    for (const ElementSet& d : cyc)
      if (d != c && (c & ~d).none()) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(c);
  }
  const std::size_t n = G.order();
  for (std::size_t a = 0; a < maximal.size(); ++a)
    for (std::size_t b = a; b < maximal.size(); ++b) {
      const std::size_t prod = maximal[a].count() * maximal[b].count();
      if (prod < n) continue;
      if (prod / (maximal[a] & maximal[b]).count() == n) return true;
    }
  return n == 1;
}

bool janko_criterion(const GroupTable& G) {
  if (is_metacyclic(G)) return true;
  if (rank_of(G, G.all()) != 2) return false;
  int nonmeta = 0;
  for (const ElementSet& M : maximal_subgroups(G))
    if (!is_metacyclic(G, M)) ++nonmeta;
  return nonmeta == 1;
}

ShapeTags classify_shape(const GroupTable& G) {
  ShapeTags t;
  const std::size_t n = G.order();
  const ElementSet all = G.all();
  const int N = log2_exact(n);
  t.abelian = G.is_abelian();
  t.cyclic = is_cyclic(G, all);
  if (t.abelian) {
    auto inv = abelian_invariants(G, all);
    t.homocyclic = inv.size() >= 2 && inv.front() == inv.back();
    t.elementary_abelian = n > 1 && inv.front() == 1;
  }
  const int cls = nilpotency_class(G);
  t.maximal_class = n >= 8 && cls == N - 1;
  if (t.maximal_class) {
    std::size_t involutions = 0;
    for (std::size_t x = 0; x < n; ++x) involutions += G.elem_order(Elem(x)) == 2;
    t.quaternion = involutions == 1;
    t.dihedral = involutions == (n / 2) + 1;
    t.semidihedral = N >= 4 && involutions == (n / 4) + 1;
  }
  t.metacyclic = t.cyclic || is_metacyclic(G);
  t.bicyclic = t.metacyclic || is_bicyclic(G);
  const bool small_rank = rank_of(G, all) <= 2;
  if (!t.abelian && small_rank) {
    const auto maximals = maximal_subgroups(G);
    bool all_abelian = true;
    for (const ElementSet& M : maximals) all_abelian = all_abelian && centralizer(G, M, M) == M;
    const ElementSet Gp = derived(G, all);
    if (all_abelian && Gp.count() == 2 && (!t.metacyclic || is_D8(G))) {
      Quotient q = quotient(G, Gp);
      auto inv = abelian_invariants(q.table, q.table.all());
      if (inv.size() == 2) t.min_nonabelian = std::make_pair(inv[0], inv[1]);
    }
    t.wreath_C2n_C2 = is_wreath(G, maximals);
  }
  return t;
}

Localizers localizers(const GroupTable& G, const SubgroupRef& S) {
  const ElementSet all = G.all();
  return {SubgroupRef::trusted(G, centralizer(G, S.mask(), all)),
          SubgroupRef::trusted(G, normalizer(G, S.mask(), all)),
          SubgroupRef::trusted(G, core(G, S.mask(), all))};
}

}  // namespace bicyclic
