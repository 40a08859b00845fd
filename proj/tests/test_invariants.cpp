#include "doctest.h"

#include "bicyclic/families.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/subgroup_ops.hpp"
#include "oracles.hpp"

using namespace bicyclic;

namespace {
GroupTable build(Family f, int n, int m = 0) { return construct_family(FamilySpec{f, n, m}); }
}  // namespace

TEST_CASE("structural invariants of D8") {
  const InvariantRecord r = structural_invariants(build(Family::kDihedral, 3));
  CHECK(r.center_size == 2);
  CHECK(r.rank == 2);
  CHECK(r.nilpotency_class == 2);
  CHECK(r.exponent == 4);
  CHECK(r.two_rank == 2);
}

TEST_CASE("structural invariants of the smallest Janko group") {
  const GroupTable J = construct_family({Family::kJanko, 2, 2, 2, 0, 0});
  const InvariantRecord r = structural_invariants(J);
  const ElementSet D = oracle::derived(J);
  CHECK(D.count() == 4);
  CHECK(r.derived_series_sizes.at(1) == 4);
  CHECK(r.derived_is_cyclic);
  bool has_generator = false;
  for (std::size_t x = 0; x < J.order(); ++x)
    if (D.test(x) && oracle::order_of(J, Elem(x)) == 4) has_generator = true;
  CHECK(has_generator);
  CHECK(r.rank == 2);
}

TEST_CASE("structural invariants of C4 x C2") {
  const GroupTable G = direct_product(cyclic_group(2), cyclic_group(1));
  const InvariantRecord r = structural_invariants(G);
  CHECK(r.omega_sizes.at(0) == 4);
  CHECK(r.agemo_sizes.at(0) == 2);
  CHECK(r.rank == 2);
}

TEST_CASE("invariant record properties over every family up to order 64") {
  for (int N = 1; N <= 6; ++N)
    for (const FamilySpec& s : family_specs_of_order(N)) {
      CAPTURE(describe(s));
      const GroupTable G = construct_family(s);
      const InvariantRecord r = structural_invariants(G);
      CHECK(r.rank >= 1);
      CHECK(r.two_rank >= 1);
      CHECK(r.nilpotency_class <= N);
      CHECK(r.frattini_size * (std::size_t(1) << r.rank) == G.order());
      CHECK(r.frattini_size == frattini(G, G.all()).count());
      CHECK(r.center_size == oracle::center(G).count());
      CHECK(r.derived_series_sizes.at(1) == oracle::derived(G).count());
      CHECK(r.derived_series_sizes.back() == 1);
    }
}

TEST_CASE("structural invariants of a subgroup equal those of its induced table") {
  const GroupTable W = build(Family::kWreath, 2);
  ElementSet base;
  for (std::size_t x = 0; x < W.order(); x += 2) base.set(x);
  const SubgroupRef B(W, base);
  CHECK(structural_invariants(B) == structural_invariants(induced(B).table));
  CHECK(structural_invariants(B).order == 16);
}

TEST_CASE("shape tags of the standard examples") {
  const ShapeTags e8 = classify_shape(direct_product(direct_product(cyclic_group(1), cyclic_group(1)), cyclic_group(1)));
  CHECK(e8.elementary_abelian);
  CHECK_FALSE(e8.bicyclic);
  const ShapeTags w = classify_shape(build(Family::kWreath, 2));
  CHECK(w.bicyclic);
  CHECK_FALSE(w.metacyclic);
  CHECK(w.wreath_C2n_C2);
  const ShapeTags q = classify_shape(build(Family::kQuaternion, 3));
  CHECK(q.quaternion);
  CHECK(q.maximal_class);
  CHECK(q.metacyclic);
  CHECK(q.bicyclic);
  const ShapeTags mna = classify_shape(build(Family::kMinNonabelian, 2, 1));
  REQUIRE(mna.min_nonabelian.has_value());
  CHECK(*mna.min_nonabelian == std::pair{2, 1});
}

TEST_CASE("shape tag implications and agreement with brute-force predicates") {
  for (int N = 1; N <= 5; ++N)
    for (const FamilySpec& s : family_specs_of_order(N)) {
      CAPTURE(describe(s));
      const GroupTable G = construct_family(s);
      const ShapeTags t = classify_shape(G);
      CHECK(int(t.dihedral) + int(t.semidihedral) + int(t.quaternion) <= 1);
      if (t.dihedral || t.semidihedral || t.quaternion) CHECK(t.maximal_class);
      if (t.cyclic) CHECK(t.metacyclic);
      if (t.metacyclic) CHECK(t.bicyclic);
      if (rank_of(G, G.all()) > 2) CHECK_FALSE(t.bicyclic);
      CHECK(t.bicyclic == oracle::bicyclic(G));
      CHECK(t.metacyclic == oracle::metacyclic(G));
      CHECK(t.maximal_class == (G.order() >= 8 && nilpotency_class(G) == N - 1));
    }
}

TEST_CASE("Janko's criterion agrees with the brute-force bicyclic test") {
  for (int N = 2; N <= 6; ++N)
    for (const FamilySpec& s : family_specs_of_order(N)) {
      CAPTURE(describe(s));
      const GroupTable G = construct_family(s);
      CHECK(janko_criterion(G) == oracle::bicyclic(G));
    }
}

TEST_CASE("rank computed from homomorphisms matches the Frattini quotient") {
  for (int N = 1; N <= 6; ++N)
    for (const FamilySpec& s : family_specs_of_order(N)) {
      const GroupTable G = construct_family(s);
      CHECK(rank_via_homs(G) == rank_of(G, G.all()));
    }
}

TEST_CASE("localizers") {
  const GroupTable D8 = build(Family::kDihedral, 3);
  // Klein four-subgroup {1, v^2, x, v^2 x}; v^2 has index 4.
  const SubgroupRef V(D8, to_set(std::vector<Elem>{0, 1, 4, 5}));
  const Localizers l = localizers(D8, V);
  CHECK(l.normalizer.order() == 8);
  CHECK(l.centralizer.mask() == V.mask());
  CHECK(l.core.mask() == V.mask());

  const SubgroupRef Z(D8, center(D8));
  const Localizers lz = localizers(D8, Z);
  CHECK(lz.centralizer.order() == 8);
  CHECK(lz.normalizer.order() == 8);

  const GroupTable W = build(Family::kWreath, 2);
  ElementSet base;
  for (std::size_t x = 0; x < W.order(); x += 2) base.set(x);
  const Localizers lw = localizers(W, SubgroupRef(W, base));
  CHECK(lw.normalizer.order() == 32);
  CHECK(lw.core.mask() == base);
}

TEST_CASE("abelian invariants") {
  const GroupTable G = direct_product(cyclic_group(3), cyclic_group(1));
  CHECK(abelian_invariants(G, G.all()) == std::vector<int>{3, 1});
  const GroupTable H = build(Family::kHomocyclic, 2);
  CHECK(abelian_invariants(H, H.all()) == std::vector<int>{2, 2});
}
