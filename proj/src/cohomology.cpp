#include "bicyclic/cohomology.hpp"

#include "bicyclic/error.hpp"
#include "bicyclic/subgroup_ops.hpp"

namespace bicyclic {

namespace {

using gf2::BitVector;

// Unknowns are u(x, k) = f(x, g_k) for every x and generator g_k, at index
// x * d + k. Every other value f(x, y) is a fixed linear form in them,
// obtained by walking a spanning tree of the Cayley graph:
//   f(x, y g) = f(x, y) + f(xy, g) + f(y, g).
// Cayley-graph edges outside the tree then give the remaining constraints.
struct Parametrization {
  std::size_t n = 0, d = 0;
  std::vector<Elem> gens;
  std::vector<BitVector> form;  // form[x * n + y]
};

Parametrization parametrize(const GroupTable& G) {
  Parametrization p;
  p.n = G.order();
  p.gens = minimal_generators(G);
  p.d = p.gens.size();
  const std::size_t n = p.n, d = p.d, U = n * d;
  p.form.assign(n * n, BitVector(U));

  std::vector<Elem> bfs{G.identity()}, parent(n, 0);
  std::vector<std::uint8_t> via(n, 0);
  std::vector<bool> seen(n, false);
  seen[G.identity()] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    for (std::size_t k = 0; k < d; ++k) {
      const Elem y = G.mul(bfs[head], p.gens[k]);
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = bfs[head];
      via[y] = std::uint8_t(k);
      bfs.push_back(y);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 1; t < bfs.size(); ++t) {
      const Elem y = bfs[t], py = parent[y];
      const std::size_t k = via[y];
      BitVector v = p.form[x * n + py];
      v.flip(std::size_t(G.mul(Elem(x), py)) * d + k);
      v.flip(std::size_t(py) * d + k);
      p.form[x * n + y] = std::move(v);
    }
  }
  return p;
}

BitVector expand(const Parametrization& p, const BitVector& u) {
  BitVector f(p.n * p.n);
  for (std::size_t k = 0; k < p.n * p.n; ++k)
    if (p.form[k].dot(u)) f.set(k);
  return f;
}

}  // namespace

CocycleBasis cocycle_space(const GroupTable& G) {
  CocycleBasis out;
  out.base_group = G;
  const std::size_t n = G.order();
  if (n > 128) throw Error(ErrorCode::kOrderTooLarge, "cocycle space limited to order <= 128");
  const Elem e = G.identity();
  const std::size_t N2 = n * n;

  if (n > 1) {
    const Parametrization p = parametrize(G);
    const std::size_t d = p.d, U = n * d;
    gf2::EchelonBasis constraints(U);
    for (std::size_t k = 0; k < d; ++k) {
      BitVector r(U);
      r.set(std::size_t(e) * d + k);  // f(1, g) = 0
      constraints.insert(std::move(r));
    }
    // f(x, y) + f(xy, g) + f(y, g) + f(x, yg) = 0 for every x, y, generator g.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Elem xy = G.mul(Elem(x), Elem(y));
        for (std::size_t k = 0; k < d; ++k) {
          const Elem yg = G.mul(Elem(y), p.gens[k]);
          BitVector r = p.form[x * n + y];
          r ^= p.form[x * n + yg];
          r.flip(std::size_t(xy) * d + k);
          r.flip(y * d + k);
          if (!r.none()) constraints.insert(std::move(r));
        }
      }
    }
    for (const BitVector& u : constraints.nullspace()) out.z2_basis.push_back(expand(p, u));
  }

  gf2::EchelonBasis b2(N2);
  for (std::size_t u = 0; u < n; ++u) {
    if (u == e) continue;
    BitVector v(N2);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const bool bit = (a == u) ^ (b == u) ^ (G.mul(Elem(a), Elem(b)) == u);
        if (bit) v.set(a * n + b);
      }
    if (b2.insert(v)) out.b2_basis.push_back(std::move(v));
  }

  gf2::EchelonBasis seen = b2;
  for (const BitVector& z : out.z2_basis) {
    BitVector r = b2.reduce(z);
    if (seen.insert(r)) out.h2_basis.push_back(std::move(r));
  }
  out.h2_dim = int(out.h2_basis.size());
  return out;
}

GroupTable extension_by_cocycle(const GroupTable& G, const BitVector& f) {
  const std::size_t n = G.order(), m = 2 * n;
  if (f.size() != n * n) throw Error(ErrorCode::kBadParameters, "cocycle length does not match |G|^2");
  std::vector<Elem> mult(m * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = G.mul(Elem(a), Elem(b));
      const unsigned c = f.test(a * n + b) ? 1u : 0u;
      for (unsigned s = 0; s < 2; ++s)
        for (unsigned t = 0; t < 2; ++t) mult[(2 * a + s) * m + 2 * b + t] = Elem(2 * ab + (s ^ t ^ c));
    }
  std::vector<Elem> gens;
  for (Elem g : minimal_generators(G)) gens.push_back(Elem(2 * g));
  gens.push_back(Elem(2 * G.identity() + 1));
  return make_table(m, std::move(mult), Elem(2 * G.identity()), gens);
}

std::vector<BitVector> h2_representatives(const CocycleBasis& basis) {
  const std::size_t n = basis.base_group.order();
  std::vector<BitVector> out;
  const std::size_t count = std::size_t(1) << basis.h2_dim;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    BitVector f(n * n);
    for (int j = 0; j < basis.h2_dim; ++j)
      if (mask >> j & 1u) f ^= basis.h2_basis[j];
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<GroupTable> central_extensions(const GroupTable& G, int h2_cap) {
  const CocycleBasis basis = cocycle_space(G);
  if (basis.h2_dim > h2_cap)
    throw Error(ErrorCode::kH2TooLarge, "h2_dim " + std::to_string(basis.h2_dim) + " exceeds cap " +
                                            std::to_string(h2_cap) + " for base group of order " +
                                            std::to_string(G.order()));
  std::vector<GroupTable> out;
  for (const BitVector& f : h2_representatives(basis)) out.push_back(extension_by_cocycle(G, f));
  return out;
}

}  // namespace bicyclic
