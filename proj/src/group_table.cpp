#include "bicyclic/group_table.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "bicyclic/error.hpp"
#include "bicyclic/subgroup_ops.hpp"

namespace bicyclic {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

// Latin square and two-sided identity. Shared by both construction paths.
void check_latin_and_identity(std::size_t n, const std::vector<Elem>& mult, Elem identity) {
  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      Elem v = mult[r * n + c];
      if (seen[v]) {
        throw Error(ErrorCode::kNotLatin,
                    "row " + std::to_string(r) + " repeats element " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      Elem v = mult[r * n + c];
      if (seen[v]) {
        throw Error(ErrorCode::kNotLatin,
                    "column " + std::to_string(c) + " repeats element " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (mult[identity * n + x] != x || mult[x * n + identity] != x) {
      throw Error(ErrorCode::kNoIdentity,
                  "element " + std::to_string(identity) + " fails at " + std::to_string(x));
    }
  }
}

// Greedy generating set straight from a raw table (no inverses needed).
std::vector<Elem> raw_generators(std::size_t n, const std::vector<Elem>& mult, Elem identity) {
  std::vector<Elem> gens;
  ElementSet reached;
  reached.set(identity);
  std::vector<Elem> frontier;
  for (std::size_t g = 0; g < n; ++g) {
    if (reached.test(g)) continue;
    gens.push_back(Elem(g));
    // Recompute closure from scratch under right multiplication by gens.
    reached.reset();
    reached.set(identity);
    frontier.assign(1, identity);
    while (!frontier.empty()) {
      Elem x = frontier.back();
      frontier.pop_back();
      for (Elem s : gens) {
        Elem y = mult[std::size_t(x) * n + s];
        if (!reached.test(y)) {
          reached.set(y);
          frontier.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && std::has_single_bit(n); }

int log2_exact(std::size_t n) noexcept { return std::countr_zero(n); }

GroupTable::GroupTable() : GroupTable(1, std::vector<Elem>{0}, 0, {}) {}

GroupTable::GroupTable(std::size_t n, std::vector<Elem> mult, Elem identity,
                       std::vector<std::string> labels)
    : n_(n), identity_(identity), mult_(std::move(mult)), inv_(n), order_(n), labels_(std::move(labels)) {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (mult_[a * n_ + b] == identity_) {
        inv_[a] = Elem(b);
        break;
      }
    }
    unsigned k = 1;
    Elem x = Elem(a);
    while (x != identity_) {
      x = mul(x, Elem(a));
      ++k;
    }
    order_[a] = std::uint16_t(k);
  }
}

Elem GroupTable::pow(Elem a, long long k) const noexcept {
  long long ord = order_[a];
  k %= ord;
  if (k < 0) k += ord;
  Elem result = identity_;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

ElementSet GroupTable::all() const noexcept {
  ElementSet s;
  for (std::size_t i = 0; i < n_; ++i) s.set(i);
  return s;
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) return false;
  return true;
}

GroupTable verify_table(const std::vector<std::vector<long long>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorCode::kNotLatin, "empty table");
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "order " + std::to_string(n) + " exceeds cap 256");
  }
  if (!is_power_of_two(n)) {
    throw Error(ErrorCode::kBadParameters, "order " + std::to_string(n) + " is not a power of 2");
  }
  std::vector<Elem> mult(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (raw[r].size() != n) {
      throw Error(ErrorCode::kNotLatin, "row " + std::to_string(r) + " has wrong length");
    }
    for (std::size_t c = 0; c < n; ++c) {
      long long v = raw[r][c];
      if (v < 0 || std::size_t(v) >= n) {
        throw Error(ErrorCode::kNotLatin, "entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                              ") out of range");
      }
      mult[r * n + c] = Elem(v);
    }
  }
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mult[e * n + x] == x && mult[x * n + e] == x;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(ErrorCode::kNoIdentity, "no two-sided identity element");
  check_latin_and_identity(n, mult, Elem(identity));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = mult[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (mult[ab * n + c] != mult[a * n + mult[b * n + c]]) {
          throw Error(ErrorCode::kNotAssociative, "triple " + triple(a, b, c));
        }
      }
    }
  }
  return GroupTable(n, std::move(mult), Elem(identity), {});
}

GroupTable make_table(std::size_t n, std::vector<Elem> mult, Elem identity,
                      std::span<const Elem> gens, std::vector<std::string> labels) {
  if (n == 0 || n > kMaxOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "order " + std::to_string(n) + " outside 1..256");
  }
  check_latin_and_identity(n, mult, identity);
  std::vector<Elem> own;
  if (gens.empty()) {
    own = raw_generators(n, mult, identity);
    gens = own;
  }
  ElementSet reached;
  reached.set(identity);
  std::vector<Elem> frontier{identity};
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (Elem s : gens) {
      Elem y = mult[std::size_t(x) * n + s];
      if (!reached.test(y)) {
        reached.set(y);
        frontier.push_back(y);
      }
    }
  }
  if (reached.count() != n) {
    throw Error(ErrorCode::kBadParameters, "builder generators do not generate the table");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = mult[x * n + y];
      for (Elem g : gens) {
        if (mult[xy * n + g] != mult[x * n + mult[y * n + g]]) {
          throw Error(ErrorCode::kNotAssociative, "triple " + triple(x, y, g));
        }
      }
    }
  }
  if (!labels.empty() && labels.size() != n) labels.clear();
  return GroupTable(n, std::move(mult), identity, std::move(labels));
}

SubgroupRef::SubgroupRef(const GroupTable& parent, const ElementSet& elems)
    : parent_(&parent), mask_(elems) {
  const std::size_t n = parent.order();
  for (std::size_t i = n; i < kMaxOrder; ++i) {
    if (elems.test(i)) throw Error(ErrorCode::kNotSubgroup, "element index out of range");
  }
  if (!elems.test(parent.identity())) {
    throw Error(ErrorCode::kNotSubgroup, "identity missing");
  }
  std::vector<Elem> v = to_vector(elems);
  for (Elem a : v)
    for (Elem b : v)
      if (!elems.test(parent.mul(a, b))) {
        throw Error(ErrorCode::kNotSubgroup,
                    "not closed: " + std::to_string(a) + "*" + std::to_string(b));
      }
}

SubgroupRef SubgroupRef::trusted(const GroupTable& parent, const ElementSet& elems) {
  return SubgroupRef(&parent, elems);
}

std::vector<Elem> SubgroupRef::elements() const { return to_vector(mask_); }

std::vector<Elem> to_vector(const ElementSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (std::size_t i = s._Find_first(); i < kMaxOrder; i = s._Find_next(i)) out.push_back(Elem(i));
  return out;
}

ElementSet to_set(std::span<const Elem> elems) {
  ElementSet s;
  for (Elem e : elems) s.set(e);
  return s;
}

Embedded induced(const GroupTable& G, const ElementSet& H) {
  Embedded out;
  out.to_parent = to_vector(H);
  out.from_parent.assign(G.order(), -1);
  const std::size_t m = out.to_parent.size();
  for (std::size_t k = 0; k < m; ++k) out.from_parent[out.to_parent[k]] = int(k);
  std::vector<Elem> mult(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      int c = out.from_parent[G.mul(out.to_parent[a], out.to_parent[b])];
      if (c < 0) throw Error(ErrorCode::kNotSubgroup, "set is not closed under multiplication");
      mult[a * m + b] = Elem(c);
    }
  }
  int id = out.from_parent[G.identity()];
  if (id < 0) throw Error(ErrorCode::kNotSubgroup, "identity missing");
  std::vector<Elem> gens;
  for (Elem g : minimal_generators(G, H)) gens.push_back(Elem(out.from_parent[g]));
  out.table = make_table(m, std::move(mult), Elem(id), gens);
  return out;
}

Quotient quotient(const GroupTable& G, const ElementSet& N) {
  if (!is_normal(G, N)) throw Error(ErrorCode::kNotNormal, "subgroup is not normal");
  const std::size_t n = G.order();
  const std::vector<Elem> nelems = to_vector(N);
  const std::size_t k = n / nelems.size();
  Quotient q;
  q.projection.assign(n, Elem(0));
  std::vector<bool> assigned(n, false);
  std::vector<Elem> reps;
  for (std::size_t g = 0; g < n; ++g) {
    if (assigned[g]) continue;
    Elem id = Elem(reps.size());
    reps.push_back(Elem(g));
    for (Elem x : nelems) {
      Elem y = G.mul(Elem(g), x);
      assigned[y] = true;
      q.projection[y] = id;
    }
  }
  std::vector<Elem> mult(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) mult[a * k + b] = q.projection[G.mul(reps[a], reps[b])];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (q.projection[G.mul(Elem(a), Elem(b))] != mult[q.projection[a] * k + q.projection[b]]) {
        throw Error(ErrorCode::kNotNormal, "projection is not a homomorphism");
      }
  std::vector<Elem> gens;
  for (Elem g : minimal_generators(G)) gens.push_back(q.projection[g]);
  q.table = make_table(k, std::move(mult), q.projection[G.identity()], gens);
  return q;
}

GroupTable direct_product(const GroupTable& G, const GroupTable& H) {
  const std::size_t a = G.order(), b = H.order();
  const std::size_t n = a * b;
  if (n > kMaxOrder) throw Error(ErrorCode::kOrderTooLarge, "direct product exceeds order cap");
  std::vector<Elem> mult(n * n);
  for (std::size_t g1 = 0; g1 < a; ++g1)
    for (std::size_t h1 = 0; h1 < b; ++h1)
      for (std::size_t g2 = 0; g2 < a; ++g2)
        for (std::size_t h2 = 0; h2 < b; ++h2) {
          std::size_t x = g1 * b + h1, y = g2 * b + h2;
          mult[x * n + y] = Elem(G.mul(Elem(g1), Elem(g2)) * b + H.mul(Elem(h1), Elem(h2)));
        }
  std::vector<Elem> gens;
  for (Elem g : minimal_generators(G)) gens.push_back(Elem(g * b + H.identity()));
  for (Elem h : minimal_generators(H)) gens.push_back(Elem(G.identity() * b + h));
  std::vector<std::string> labels;
  if (!G.labels().empty() && !H.labels().empty()) {
    for (std::size_t g = 0; g < a; ++g)
      for (std::size_t h = 0; h < b; ++h) labels.push_back("(" + G.labels()[g] + "," + H.labels()[h] + ")");
  }
  return make_table(n, std::move(mult), Elem(G.identity() * b + H.identity()), gens, std::move(labels));
}

GroupTable central_product(const GroupTable& G, const GroupTable& H, const ElementSet& zG,
                           const ElementSet& zH, const std::vector<std::pair<Elem, Elem>>& matching) {
  if ((zG & ~center(G)).any()) throw Error(ErrorCode::kNotCentral, "zG is not central in G");
  if ((zH & ~center(H)).any()) throw Error(ErrorCode::kNotCentral, "zH is not central in H");
  SubgroupRef(G, zG);
  SubgroupRef(H, zH);
  std::map<Elem, Elem> m;
  ElementSet image;
  for (auto [x, y] : matching) {
    if (!zG.test(x) || !zH.test(y) || !m.emplace(x, y).second) {
      throw Error(ErrorCode::kMatchingNotIso, "matching entry outside the designated subgroups");
    }
    image.set(y);
  }
  if (m.size() != zG.count() || image != zH) {
    throw Error(ErrorCode::kMatchingNotIso, "matching is not a bijection");
  }
  for (auto [x1, y1] : m)
    for (auto [x2, y2] : m)
      if (m.at(G.mul(x1, x2)) != H.mul(y1, y2)) {
        throw Error(ErrorCode::kMatchingNotIso, "matching is not a homomorphism");
      }
  GroupTable P = direct_product(G, H);
  ElementSet anti;
  const std::size_t b = H.order();
  for (auto [x, y] : m) anti.set(x * b + H.inv(y));
  return quotient(P, anti).table;
}

}  // namespace bicyclic
