#include "doctest.h"

#include <algorithm>
#include <functional>

#include "bicyclic/error.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/fusion.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/subgroup_ops.hpp"
#include "oracles.hpp"

using namespace bicyclic;

namespace {

GroupTable build(Family f, int n, int m = 0) { return construct_family(FamilySpec{f, n, m}); }

std::vector<EssentialReport> candidates(const GroupTable& P) {
  std::vector<EssentialReport> out;
  for (auto& r : essential_candidates(P))
    if (r.candidate()) out.push_back(r);
  return out;
}

std::vector<std::string> tags(const std::vector<EssentialReport>& rs) {
  std::vector<std::string> t;
  for (const auto& r : rs) t.push_back(to_string(r.iso_type));
  std::sort(t.begin(), t.end());
  return t;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParseError;
}

}  // namespace

TEST_CASE("candidate classes of the reference groups") {
  CHECK(tags(candidates(build(Family::kDihedral, 4))) == std::vector<std::string>{"C2sq", "C2sq"});
  CHECK(tags(candidates(build(Family::kQuaternion, 4))) == std::vector<std::string>{"Q8_small", "Q8_small"});
  CHECK(tags(candidates(build(Family::kSemidihedral, 4))) == std::vector<std::string>{"C2sq", "Q8_small"});
  CHECK(tags(candidates(build(Family::kMinNonabelian, 2, 1))) == std::vector<std::string>{"C2m_x_C2sq(m=1)"});
  CHECK(tags(candidates(build(Family::kWreath, 2))) ==
        std::vector<std::string>{"C2m_ast_Q8(m=2)", "homocyclic(m=2)"});
}

TEST_CASE("conditions agree with direct recomputation from the definitions") {
  for (int N = 3; N <= 5; ++N)
    for (const FamilySpec& s : family_specs_of_order(N)) {
      const GroupTable P = construct_family(s);
      if (!oracle::bicyclic(P)) continue;
      CAPTURE(describe(s));
      for (const EssentialReport& r : essential_candidates(P)) {
        const ElementSet Q = r.class_rep.mask();
        ElementSet C, Nm;
        for (std::size_t g = 0; g < P.order(); ++g) {
          bool centralizes = true, normalizes = true;
          for (std::size_t q = 0; q < P.order(); ++q) {
            if (!Q.test(q)) continue;
            const Elem c = P.mul(P.mul(Elem(g), Elem(q)), oracle::inverse(P, Elem(g)));
            centralizes = centralizes && c == q;
            normalizes = normalizes && Q.test(c);
          }
          if (centralizes) C.set(g);
          if (normalizes) Nm.set(g);
        }
        ElementSet squares;
        for (std::size_t q = 0; q < P.order(); ++q)
          if (Q.test(q)) squares.set(P.mul(Elem(q), Elem(q)));
        const ElementSet phi = oracle::close(P, squares);
        CHECK(r.conditions.self_centralizing == ((C & ~Q).none()));
        CHECK(r.conditions.norm_index_two == (Nm.count() == 2 * Q.count()));
        if (r.conditions.self_centralizing && r.conditions.norm_index_two) {
          bool faithful = true;
          for (std::size_t x = 0; x < P.order(); ++x) {
            if (!Nm.test(x) || Q.test(x)) continue;
            bool moves = false;
            for (std::size_t q = 0; q < P.order() && !moves; ++q)
              if (Q.test(q)) moves = !phi.test(P.comm(Elem(x), Elem(q)));
            faithful = faithful && moves;
          }
          CHECK(r.conditions.faithful_on_frattini_quotient == faithful);
        }
        CHECK(r.conditions.s3_evaluated == (r.conditions.self_centralizing && r.conditions.norm_index_two &&
                                            r.conditions.faithful_on_frattini_quotient));
        CHECK(r.rank_of_q == rank_of(P, Q));
        CHECK(r.is_normal_in_p == (Nm.count() == P.order()));
        if (r.alpha_witness) {
          const auto& a = *r.alpha_witness;
          const auto elems = r.class_rep.elements();
          REQUIRE(a.size() == elems.size());
          // Order 3 and multiplicative on Q.
          for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = 0; j < elems.size(); ++j) {
              const Elem prod = P.mul(elems[i], elems[j]);
              const auto pos = std::size_t(std::lower_bound(elems.begin(), elems.end(), prod) - elems.begin());
              CHECK(a[pos] == P.mul(a[i], a[j]));
            }
          bool moves = false;
          for (std::size_t i = 0; i < elems.size(); ++i) {
            moves = moves || a[i] != elems[i];
            const auto p1 = std::size_t(std::lower_bound(elems.begin(), elems.end(), a[i]) - elems.begin());
            const auto p2 = std::size_t(std::lower_bound(elems.begin(), elems.end(), a[p1]) - elems.begin());
            CHECK(a[p2] == elems[i]);
          }
          CHECK(moves);
        }
      }
    }
}

TEST_CASE("admits_nonnilpotent examples") {
  const FusionVerdict c16 = admits_nonnilpotent(cyclic_group(4));
  CHECK_FALSE(c16.admits_nonnilpotent);
  CHECK(c16.reason == VerdictReason::kNone);
  const FusionVerdict c44 = admits_nonnilpotent(build(Family::kHomocyclic, 2));
  CHECK(c44.admits_nonnilpotent);
  CHECK(c44.reason == VerdictReason::kAutNot2Group);
  const FusionVerdict j = admits_nonnilpotent(construct_family({Family::kJanko, 2, 2, 2, 0, 0}));
  CHECK(j.admits_nonnilpotent);
  CHECK(j.reason == VerdictReason::kEssentialCandidateExists);
  REQUIRE(j.candidate_classes.size() == 1);
  CHECK(to_string(j.candidate_classes[0].iso_type) == "C2m_x_C2sq(m=1)");
}

TEST_CASE("fs_multiplicity examples") {
  CHECK(fs_multiplicity(build(Family::kSemidihedral, 4)).fs_count == 3);
  const FusionVerdict j = fs_multiplicity(construct_family({Family::kJanko, 2, 2, 2, 0, 0}));
  CHECK(j.fs_count == 2);
  REQUIRE(j.matched_case.has_value());
  CHECK(j.matched_case->case_id == 10);
  REQUIRE(j.center_candidates.size() == 2);
  CHECK(j.center_candidates[0].is_square);
  const FusionVerdict q8 = fs_multiplicity(build(Family::kQuaternion, 3));
  CHECK(q8.fs_count == 1);
  CHECK(q8.candidate_classes.empty());
  CHECK(fs_multiplicity(cyclic_group(3)).fs_count == 0);
}

TEST_CASE("verdict consistency over bicyclic families up to order 64") {
  for (int N = 1; N <= 6; ++N)
    for (const FamilySpec& s : family_specs_of_order(N)) {
      const GroupTable P = construct_family(s);
      if (!is_bicyclic(P)) continue;
      CAPTURE(describe(s));
      const FusionVerdict v = fs_multiplicity(P);
      CHECK(v.admits_nonnilpotent == (v.reason != VerdictReason::kNone));
      CHECK(v.admits_nonnilpotent == (v.fs_count >= 1));
      for (const auto& r : v.candidate_classes) CHECK(r.candidate());
    }
}

TEST_CASE("non-bicyclic and high-rank inputs are rejected") {
  const GroupTable E8 = direct_product(direct_product(cyclic_group(1), cyclic_group(1)), cyclic_group(1));
  CHECK(code_of([&] { admits_nonnilpotent(E8); }) == ErrorCode::kNotBicyclic);
  // Proper subgroups of C2^5 reach rank 4.
  const GroupTable E32 = direct_product(direct_product(E8, cyclic_group(1)), cyclic_group(1));
  CHECK(code_of([&] { essential_candidates(E32); }) == ErrorCode::kRankTooHigh);
}

TEST_CASE("structural checks on rank-3 candidates") {
  const GroupTable M = build(Family::kMinNonabelian, 2, 1);
  const auto mc = candidates(M);
  REQUIRE(mc.size() == 1);
  CHECK(mc[0].is_normal_in_p);
  for (const StructuralCheck& s : structural_checks(M, mc)) {
    CAPTURE(s.check);
    CHECK(s.passed);
  }

  const GroupTable J = construct_family({Family::kJanko, 3, 2, 2, 0, 0});
  const auto jc = candidates(J);
  REQUIRE_FALSE(jc.empty());
  for (const EssentialReport& r : jc) {
    if (r.rank_of_q != 3) continue;
    const ElementSet Q = r.class_rep.mask();
    const ElementSet K = core(J, Q, J.all());
    CHECK(K.count() > 1);
    const Quotient PK = quotient(J, K);
    CHECK(oracle::center(PK.table).count() == 2);
  }
  for (const StructuralCheck& s : structural_checks(J, jc)) CHECK(s.passed);

  const GroupTable D16 = build(Family::kDihedral, 4);
  CHECK(structural_checks(D16, candidates(D16)).empty());
}

TEST_CASE("reference groups for the tags") {
  CHECK(iso_reference(IsoTag{IsoType::kC2mxQ8, 1}).order() == 16);
  CHECK(iso_reference(IsoTag{IsoType::kC2mastQ8, 2}).order() == 16);
  CHECK(normalizer_reference(NormalizerTag{NormalizerType::kQ16astC2m, 2}).order() == 32);
  CHECK(classify_iso_type(build(Family::kHomocyclic, 3)) == IsoTag{IsoType::kHomocyclic, 3});
  CHECK(classify_normalizer(direct_product(build(Family::kDihedral, 3), cyclic_group(1))) ==
        NormalizerTag{NormalizerType::kD8xC2m, 1});
}
