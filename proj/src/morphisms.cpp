#include "bicyclic/morphisms.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_set>

#include "bicyclic/error.hpp"
#include "bicyclic/subgroup_ops.hpp"

namespace bicyclic {

namespace {

// Per-element invariant used to restrict candidate images.
using Signature = std::tuple<unsigned, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const GroupTable& G) {
  const ElementClasses ec = element_classes(G);
  const std::size_t n = G.order();
  std::vector<std::size_t> roots(n, 0);
  for (std::size_t x = 0; x < n; ++x) ++roots[G.mul(Elem(x), Elem(x))];
  std::vector<Signature> sig(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem sq = G.mul(Elem(x), Elem(x));
    sig[x] = {G.elem_order(Elem(x)), ec.classes[ec.class_of[x]].size(),
              ec.classes[ec.class_of[sq]].size(), roots[x]};
  }
  return sig;
}

// Everything needed to extend generator images to a full map.
struct GeneratorPlan {
  std::vector<Elem> gens;
  std::vector<Elem> bfs;           // elements in BFS order, identity first
  std::vector<Elem> parent;        // parent[x] * gens[via[x]] = x
  std::vector<std::uint8_t> via;
};

GeneratorPlan plan_for(const GroupTable& G) {
  GeneratorPlan p;
  p.gens = minimal_generators(G);
  const std::size_t n = G.order();
  p.parent.assign(n, 0);
  p.via.assign(n, 0);
  std::vector<bool> seen(n, false);
  p.bfs.push_back(G.identity());
  seen[G.identity()] = true;
  for (std::size_t head = 0; head < p.bfs.size(); ++head) {
    const Elem x = p.bfs[head];
    for (std::size_t k = 0; k < p.gens.size(); ++k) {
      const Elem y = G.mul(x, p.gens[k]);
      if (seen[y]) continue;
      seen[y] = true;
      p.parent[y] = x;
      p.via[y] = std::uint8_t(k);
      p.bfs.push_back(y);
    }
  }
  return p;
}

// Builds the map determined by generator images and checks it is an
// isomorphism. `map` is scratch space reused across calls.
bool extend(const GroupTable& G, const GroupTable& H, const GeneratorPlan& p,
            const std::vector<Elem>& images, std::vector<Elem>& map) {
  const std::size_t n = G.order();
  map.assign(n, 0);
  map[G.identity()] = H.identity();
  ElementSet hit;
  hit.set(H.identity());
  for (std::size_t k = 1; k < p.bfs.size(); ++k) {
    const Elem x = p.bfs[k];
    const Elem y = H.mul(map[p.parent[x]], images[p.via[x]]);
    if (hit.test(y)) return false;
    hit.set(y);
    map[x] = y;
  }
  // The map respects right multiplication by each generator, hence by every
  // word, hence it is a homomorphism.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < p.gens.size(); ++k)
      if (map[G.mul(Elem(x), p.gens[k])] != H.mul(map[x], images[k])) return false;
  return true;
}

// Backtracks over generator images; visit(map) returns false to stop.
void search(const GroupTable& G, const GroupTable& H,
            const std::function<bool(const std::vector<Elem>&)>& visit) {
  if (G.order() != H.order()) return;
  const GeneratorPlan p = plan_for(G);
  const std::size_t d = p.gens.size();
  const auto sg = signatures(G);
  const auto sh = signatures(H);
  std::vector<std::vector<Elem>> cands(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t h = 0; h < H.order(); ++h)
      if (sh[h] == sg[p.gens[k]]) cands[k].push_back(Elem(h));

  std::vector<Elem> images(d);
  std::vector<Elem> map;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == d) {
      if (extend(G, H, p, images, map) && !visit(map)) stop = true;
      return;
    }
    for (Elem h : cands[k]) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        ok = G.elem_order(G.mul(p.gens[j], p.gens[k])) == H.elem_order(H.mul(images[j], h)) &&
             G.elem_order(G.comm(p.gens[j], p.gens[k])) == H.elem_order(H.comm(images[j], h));
      }
      if (!ok) continue;
      images[k] = h;
      rec(k + 1);
      if (stop) return;
    }
  };
  rec(0);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream o;
  for (std::size_t k = 0; k < v.size(); ++k) o << (k ? "," : "") << v[k];
  return o.str();
}

}  // namespace

std::string Fingerprint::canonical_text() const {
  std::ostringstream o;
  o << "o=" << order << ";eo=";
  for (auto [a, b] : element_orders) o << a << ":" << b << ",";
  o << ";z=" << center_size << ";d=" << join(derived_series_sizes) << ";om=" << join(omega_sizes)
    << ";ag=" << join(agemo_sizes) << ";cs=";
  for (auto [a, b] : class_sizes) o << a << ":" << b << ",";
  o << ";pp=";
  for (auto& [a, b, c] : power_profile) o << a << "/" << b << "/" << c << ",";
  return o.str();
}

std::string Fingerprint::digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(canonical_text()));
  return buf;
}

Fingerprint fingerprint(const GroupTable& G) {
  Fingerprint f;
  const std::size_t n = G.order();
  f.order = n;
  std::map<unsigned, std::size_t> eo;
  for (std::size_t x = 0; x < n; ++x) ++eo[G.elem_order(Elem(x))];
  f.element_orders.assign(eo.begin(), eo.end());
  const ElementSet all = G.all();
  f.center_size = center(G).count();
  ElementSet D = all;
  f.derived_series_sizes.push_back(D.count());
  while (D.count() > 1) {
    ElementSet next = derived(G, D);
    if (next == D) break;
    D = next;
    f.derived_series_sizes.push_back(D.count());
  }
  for (int k = 1;; ++k) {
    f.omega_sizes.push_back(omega(G, all, k).count());
    if (f.omega_sizes.back() == n) break;
  }
  for (int k = 1;; ++k) {
    f.agemo_sizes.push_back(agemo(G, all, k).count());
    if (f.agemo_sizes.back() == 1) break;
  }
  const ElementClasses ec = element_classes(G);
  std::map<std::size_t, std::size_t> cs;
  for (const auto& c : ec.classes) ++cs[c.size()];
  f.class_sizes.assign(cs.begin(), cs.end());
  std::vector<std::size_t> roots(ec.classes.size(), 0);
  for (std::size_t x = 0; x < n; ++x) ++roots[ec.class_of[G.mul(Elem(x), Elem(x))]];
  for (std::size_t c = 0; c < ec.classes.size(); ++c) {
    f.power_profile.emplace_back(ec.classes[c].size(), G.elem_order(ec.classes[c].front()), roots[c]);
  }
  std::sort(f.power_profile.begin(), f.power_profile.end());
  return f;
}

bool is_isomorphism(const GroupTable& G, const GroupTable& H, const std::vector<Elem>& map) {
  const std::size_t n = G.order();
  if (H.order() != n || map.size() != n) return false;
  ElementSet hit;
  for (Elem y : map) {
    if (y >= n || hit.test(y)) return false;
    hit.set(y);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (map[G.mul(Elem(a), Elem(b))] != H.mul(map[a], map[b])) return false;
  return true;
}

std::optional<IsoWitness> find_isomorphism(const GroupTable& G, const GroupTable& H) {
  std::optional<IsoWitness> out;
  search(G, H, [&](const std::vector<Elem>& map) {
    out = IsoWitness{map};
    return false;
  });
  return out;
}

std::optional<IsoWitness> isomorphic(const GroupTable& G, const GroupTable& H) {
  if (G.order() != H.order()) return std::nullopt;
  if (!(fingerprint(G) == fingerprint(H))) return std::nullopt;
  return find_isomorphism(G, H);
}

void for_each_automorphism(const GroupTable& Q, const std::function<bool(const std::vector<Elem>&)>& visit) {
  if (Q.order() > 128) throw Error(ErrorCode::kOrderTooLarge, "automorphisms limited to order <= 128");
  if (minimal_generators(Q).size() > 3) throw Error(ErrorCode::kRankTooHigh, "rank exceeds 3");
  search(Q, Q, visit);
}

AutGroup automorphisms(const GroupTable& Q) {
  AutGroup A;
  const std::vector<Elem> gens = minimal_generators(Q);
  auto key = [&](const std::vector<Elem>& images) {
    std::uint64_t k = 0;
    for (Elem e : images) k = (k << 16) | e;
    return k;
  };
  std::unordered_set<std::uint64_t> closure;
  std::vector<std::vector<Elem>> closure_tuples;
  auto rebuild = [&] {
    closure.clear();
    closure_tuples.clear();
    closure_tuples.push_back(gens);
    closure.insert(key(gens));
    for (std::size_t head = 0; head < closure_tuples.size(); ++head) {
      for (const auto& g : A.generators) {
        std::vector<Elem> t(closure_tuples[head]);
        for (Elem& e : t) e = g[e];
        if (closure.insert(key(t)).second) closure_tuples.push_back(std::move(t));
      }
    }
  };
  rebuild();
  for_each_automorphism(Q, [&](const std::vector<Elem>& alpha) {
    ++A.order;
    if (A.order <= kStoredAutLimit) {
      A.elements.push_back(alpha);
    } else if (!A.elements.empty()) {
      A.elements.clear();
      A.elements.shrink_to_fit();
    }
    std::vector<Elem> images;
    for (Elem g : gens) images.push_back(alpha[g]);
    if (!closure.count(key(images))) {
      A.generators.push_back(alpha);
      rebuild();
    }
    return true;
  });
  A.is_2_group = (A.order & (A.order - 1)) == 0;
  return A;
}

ElementSet fixed_points(const std::vector<Elem>& alpha) {
  ElementSet s;
  for (std::size_t x = 0; x < alpha.size(); ++x)
    if (alpha[x] == x) s.set(x);
  return s;
}

}  // namespace bicyclic
