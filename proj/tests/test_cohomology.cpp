#include "doctest.h"

#include <functional>

#include "bicyclic/cohomology.hpp"
#include "bicyclic/error.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/morphisms.hpp"
#include "oracles.hpp"

using namespace bicyclic;

namespace {

bool is_cocycle(const GroupTable& G, const gf2::BitVector& f) {
  const std::size_t n = G.order();
  auto at = [&](std::size_t a, std::size_t b) { return f.test(a * n + b); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if ((at(a, b) ^ at(G.mul(Elem(a), Elem(b)), c)) != (at(b, c) ^ at(a, G.mul(Elem(b), Elem(c)))))
          return false;
  return true;
}

bool is_normalized(const GroupTable& G, const gf2::BitVector& f) {
  const std::size_t n = G.order(), e = G.identity();
  for (std::size_t x = 0; x < n; ++x)
    if (f.test(e * n + x) || f.test(x * n + e)) return false;
  return true;
}

// dim H^2 by enumerating every normalized function G x G -> F_2 (|G| <= 4)
// and every normalized 1-cochain.
int brute_h2_dim(const GroupTable& G) {
  const std::size_t n = G.order(), e = G.identity();
  std::vector<std::size_t> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != e && b != e) slots.push_back(a * n + b);
  std::size_t cocycles = 0;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    gf2::BitVector f(n * n);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1u) f.set(slots[k]);
    if (is_cocycle(G, f)) ++cocycles;
  }
  std::set<std::vector<bool>> coboundaries;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    if (u >> e & 1u) continue;
    std::vector<bool> d(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        d[a * n + b] = ((u >> a) ^ (u >> b) ^ (u >> G.mul(Elem(a), Elem(b)))) & 1u;
    coboundaries.insert(d);
  }
  int dim = 0;
  for (std::size_t q = cocycles / coboundaries.size(); q > 1; q >>= 1) ++dim;
  return dim;
}

std::size_t count_isomorphic(const std::vector<GroupTable>& exts, const GroupTable& H) {
  std::size_t k = 0;
  for (const GroupTable& E : exts)
    if (isomorphic(E, H)) ++k;
  return k;
}

GroupTable klein() { return direct_product(cyclic_group(1), cyclic_group(1)); }

}  // namespace

TEST_CASE("H^2 dimension matches exhaustive enumeration on tiny groups") {
  for (const GroupTable& G : {GroupTable(), cyclic_group(1), cyclic_group(2), klein()}) {
    CAPTURE(G.order());
    CHECK(cocycle_space(G).h2_dim == brute_h2_dim(G));
  }
  CHECK(cocycle_space(cyclic_group(1)).h2_dim == 1);
  CHECK(cocycle_space(klein()).h2_dim == 3);
}

TEST_CASE("H^2 dimension equals Schur multiplier rank plus abelianization rank") {
  CHECK(cocycle_space(cyclic_group(3)).h2_dim == 1);
  CHECK(cocycle_space(construct_family({Family::kDihedral, 3})).h2_dim == 3);
  CHECK(cocycle_space(construct_family({Family::kQuaternion, 3})).h2_dim == 2);
  CHECK(cocycle_space(direct_product(klein(), cyclic_group(1))).h2_dim == 6);
  CHECK(cocycle_space(direct_product(cyclic_group(2), cyclic_group(1))).h2_dim == 3);
}

TEST_CASE("basis vectors are normalized cocycles and coboundaries lie in Z^2") {
  for (const GroupTable& G : {klein(), construct_family({Family::kDihedral, 3}),
                              construct_family({Family::kQuaternion, 3})}) {
    const CocycleBasis B = cocycle_space(G);
    CHECK(B.h2_dim == int(B.h2_basis.size()));
    CHECK(B.z2_basis.size() == B.b2_basis.size() + B.h2_basis.size());
    gf2::EchelonBasis z(G.order() * G.order()), b(G.order() * G.order());
    for (const auto& f : B.z2_basis) {
      CHECK(is_cocycle(G, f));
      CHECK(is_normalized(G, f));
      CHECK(z.insert(f));
    }
    for (const auto& f : B.b2_basis) {
      CHECK(is_cocycle(G, f));
      CHECK(z.contains(f));
      CHECK(b.insert(f));
    }
    for (const auto& f : B.h2_basis) {
      CHECK(is_cocycle(G, f));
      CHECK(b.insert(f));
    }
    CHECK(h2_representatives(B).size() == (std::size_t(1) << B.h2_dim));
  }
}

TEST_CASE("extensions are groups of twice the order with a central involution") {
  const GroupTable D8 = construct_family({Family::kDihedral, 3});
  for (const GroupTable& E : central_extensions(D8)) {
    CHECK(E.order() == 16);
    // (1, 1) sits at index 2 * identity + 1.
    const Elem z = Elem(2 * D8.identity() + 1);
    CHECK(oracle::center(E).test(z));
    CHECK(E.elem_order(z) == 2);
  }
  for (const GroupTable& E : central_extensions(klein())) CHECK(oracle::associative(E));
}

TEST_CASE("extensions of small groups") {
  const auto c2 = central_extensions(cyclic_group(1));
  REQUIRE(c2.size() == 2);
  CHECK(count_isomorphic(c2, klein()) == 1);
  CHECK(count_isomorphic(c2, cyclic_group(2)) == 1);

  const auto v4 = central_extensions(klein());
  REQUIRE(v4.size() == 8);
  const GroupTable D8 = construct_family({Family::kDihedral, 3});
  const GroupTable Q8 = construct_family({Family::kQuaternion, 3});
  const GroupTable C4C2 = direct_product(cyclic_group(2), cyclic_group(1));
  const GroupTable E8 = direct_product(klein(), cyclic_group(1));
  const std::size_t d = count_isomorphic(v4, D8), q = count_isomorphic(v4, Q8), a = count_isomorphic(v4, C4C2),
                    e = count_isomorphic(v4, E8);
  CHECK(d >= 1);
  CHECK(q >= 1);
  CHECK(a >= 1);
  CHECK(e == 1);
  CHECK(d + q + a + e == 8);

  // Every group of order 16 with D8 as quotient by a central involution.
  const auto d8 = central_extensions(D8);
  CHECK(count_isomorphic(d8, construct_family({Family::kDihedral, 4})) >= 1);
  CHECK(count_isomorphic(d8, construct_family({Family::kQuaternion, 4})) >= 1);
  CHECK(count_isomorphic(d8, construct_family({Family::kSemidihedral, 4})) >= 1);
  CHECK(count_isomorphic(d8, direct_product(D8, cyclic_group(1))) == 1);

  // C4 * Q8 modulo the amalgamated involution is C2^3.
  const auto e8 = central_extensions(E8);
  const GroupTable C4Q8 = construct_family({Family::kCentralC2mQ8, 0, 2});
  REQUIRE(C4Q8.order() == 16);
  CHECK(count_isomorphic(e8, C4Q8) >= 1);

  const auto q8 = central_extensions(Q8);
  CHECK(count_isomorphic(q8, direct_product(Q8, cyclic_group(1))) == 1);
  CHECK(count_isomorphic(q8, construct_family({Family::kDihedral, 4})) == 0);
}

TEST_CASE("extension_by_cocycle with the zero cocycle is the direct product") {
  const GroupTable Q8 = construct_family({Family::kQuaternion, 3});
  const GroupTable E = extension_by_cocycle(Q8, gf2::BitVector(64));
  CHECK(isomorphic(E, direct_product(Q8, cyclic_group(1))));
}

TEST_CASE("errors") {
  const GroupTable E8 = direct_product(klein(), cyclic_group(1));
  try {
    central_extensions(E8, 5);
    FAIL("expected kH2TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kH2TooLarge);
  }
  try {
    cocycle_space(cyclic_group(8));
    FAIL("expected kOrderTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOrderTooLarge);
  }
}
