#include "doctest.h"

#include <filesystem>

#include "bicyclic/error.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/group_table.hpp"
#include "bicyclic/morphisms.hpp"
#include "bicyclic/serialize.hpp"
#include "bicyclic/subgroup_ops.hpp"
#include "oracles.hpp"

using namespace bicyclic;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParseError;
}

std::vector<std::vector<long long>> xor_table(int n) {
  std::vector<std::vector<long long>> t(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = a ^ b;
  return t;
}

GroupTable build(Family f, int n, int m = 0) { return construct_family(FamilySpec{f, n, m}); }

}  // namespace

TEST_CASE("verify_table accepts the trivial group and the Klein four-group") {
  const GroupTable T = verify_table({{0}});
  CHECK(T.order() == 1);
  CHECK(T.identity() == 0);
  const GroupTable V = verify_table(xor_table(4));
  CHECK(V.order() == 4);
  for (Elem x = 1; x < 4; ++x) CHECK(V.elem_order(x) == 2);
}

TEST_CASE("verify_table caches inverses and element orders consistent with the table") {
  const GroupTable G = construct_family({Family::kQuaternion, 4});
  const auto raw = [&] {
    std::vector<std::vector<long long>> t(G.order(), std::vector<long long>(G.order()));
    for (std::size_t a = 0; a < G.order(); ++a)
      for (std::size_t b = 0; b < G.order(); ++b) t[a][b] = G.mul(Elem(a), Elem(b));
    return t;
  }();
  const GroupTable H = verify_table(raw);
  CHECK(H == G);
  for (std::size_t a = 0; a < H.order(); ++a) {
    CHECK(H.mul(Elem(a), H.inv(Elem(a))) == H.identity());
    CHECK(H.elem_order(Elem(a)) == oracle::order_of(H, Elem(a)));
  }
}

TEST_CASE("verify_table rejects broken tables with the right error") {
  auto c4 = [] {
    std::vector<std::vector<long long>> t(4, std::vector<long long>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[a][b] = (a + b) % 4;
    return t;
  }();
  auto corrupt = c4;
  corrupt[1][1] = 3;  // duplicates 3 in row 1
  CHECK(code_of([&] { verify_table(corrupt); }) == ErrorCode::kNotLatin);

  // Subtraction mod 4 is a Latin square with a right identity but no left one.
  std::vector<std::vector<long long>> shifted(4, std::vector<long long>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) shifted[a][b] = (a - b + 4) % 4;
  CHECK(code_of([&] { verify_table(shifted); }) == ErrorCode::kNoIdentity);

  // Every loop of order 4 is a group, so break associativity at order 8:
  // swapping an intercalate of C2^3 keeps the Latin property and the identity.
  auto loop = xor_table(8);
  std::swap(loop[1][4], loop[1][7]);
  std::swap(loop[2][4], loop[2][7]);
  CHECK(code_of([&] { verify_table(loop); }) == ErrorCode::kNotAssociative);

  CHECK(code_of([] { verify_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }) == ErrorCode::kBadParameters);
  CHECK(code_of([&] { verify_table({{0, 1}, {1, 5}}); }) == ErrorCode::kNotLatin);
}

TEST_CASE("construct_family builds the small standard groups") {
  const GroupTable D8 = build(Family::kDihedral, 3);
  CHECK(D8.order() == 8);
  CHECK(oracle::involutions(D8) == 5);
  const GroupTable Q8 = build(Family::kQuaternion, 3);
  CHECK(Q8.order() == 8);
  CHECK(oracle::involutions(Q8) == 1);
  const GroupTable J = construct_family({Family::kJanko, 2, 2, 2, 0, 0});
  CHECK(J.order() == 32);
  CHECK(oracle::associative(J));
}

TEST_CASE("C4 wr C2 has order 32 and derived subgroup of order 4") {
  const GroupTable W = build(Family::kWreath, 2);
  CHECK(W.order() == 32);
  CHECK(oracle::derived(W).count() == 4);
}

TEST_CASE("every valid spec up to order 2^7 has the predicted order and is a group") {
  for (int N = 1; N <= 7; ++N) {
    for (const FamilySpec& s : family_specs_of_order(N)) {
      CAPTURE(describe(s));
      const GroupTable G = construct_family(s);
      CHECK(G.order() == (std::size_t(1) << predicted_log_order(s)));
      CHECK(G.order() == (std::size_t(1) << N));
      if (N <= 5) CHECK(oracle::associative(G));
    }
  }
}

TEST_CASE("closed-form orders of the parametrized families") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m + n <= 6; ++m)
      for (int i = std::max(2, n - m + 1); i <= n; ++i)
        CHECK(construct_family({Family::kJanko, n, m, i, 1, 1}).order() == (std::size_t(1) << (n + m + 1)));
  for (int n = 1; n <= 3; ++n) CHECK(build(Family::kWreath, n).order() == (std::size_t(1) << (2 * n + 1)));
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= r && r + s <= 7; ++s)
      CHECK(build(Family::kMinNonabelian, r, s).order() == (std::size_t(1) << (r + s + 1)));
}

TEST_CASE("the largest supported order passes the full associativity check") {
  const GroupTable G = construct_family({Family::kJanko, 4, 3, 2, 1, 0});
  REQUIRE(G.order() == 256);
  std::vector<std::vector<long long>> raw(G.order(), std::vector<long long>(G.order()));
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = 0; b < G.order(); ++b) raw[a][b] = G.mul(Elem(a), Elem(b));
  CHECK(verify_table(raw) == G);
}

TEST_CASE("construct_family rejects invalid parameters") {
  CHECK(code_of([] { construct_family({Family::kJanko, 2, 2, 1, 0, 0}); }) == ErrorCode::kBadParameters);
  CHECK(code_of([] { construct_family({Family::kJanko, 1, 2, 1, 0, 0}); }) == ErrorCode::kBadParameters);
  CHECK(code_of([] { construct_family({Family::kJanko, 2, 2, 2, 2, 0}); }) == ErrorCode::kBadParameters);
  CHECK(code_of([] { construct_family({Family::kMinNonabelian, 1, 2}); }) == ErrorCode::kBadParameters);
  CHECK(code_of([] { construct_family({Family::kDihedral, 2}); }) == ErrorCode::kBadParameters);
  CHECK(code_of([] { construct_family({Family::kCyclic, 9}); }) == ErrorCode::kOrderTooLarge);
}

TEST_CASE("direct and central products") {
  const GroupTable C2 = cyclic_group(1);
  const GroupTable V = direct_product(C2, C2);
  CHECK(V.order() == 4);
  CHECK(oracle::involutions(V) == 3);

  const GroupTable Q8 = build(Family::kQuaternion, 3);
  const GroupTable D8 = build(Family::kDihedral, 3);
  const GroupTable C4 = cyclic_group(2);
  auto amalgam = [&](const GroupTable& G) {
    const Elem z = G.pow(2, 2);  // v^2, the central involution
    return central_product(G, C4, to_set(std::vector<Elem>{G.identity(), z}), to_set(std::vector<Elem>{0, 2}),
                           {{G.identity(), 0}, {z, 2}});
  };
  const GroupTable QC = amalgam(Q8), DC = amalgam(D8);
  CHECK(QC.order() == 16);
  CHECK(oracle::center(QC).count() == 4);
  CHECK(oracle::associative(QC));
  CHECK(isomorphic(QC, DC).has_value());
}

TEST_CASE("central product rejects non-central subgroups and bad matchings") {
  const GroupTable D8 = build(Family::kDihedral, 3);
  const GroupTable C4 = cyclic_group(2);
  // x (index 1) is a non-central involution of D8.
  CHECK(code_of([&] {
          central_product(D8, C4, to_set(std::vector<Elem>{0, 1}), to_set(std::vector<Elem>{0, 2}), {{0, 0}, {1, 2}});
        }) == ErrorCode::kNotCentral);
  const Elem z = D8.pow(2, 2);
  CHECK(code_of([&] {
          central_product(D8, C4, to_set(std::vector<Elem>{0, z}), to_set(std::vector<Elem>{0, 2}), {{0, 2}, {z, 0}});
        }) == ErrorCode::kMatchingNotIso);
}

TEST_CASE("quotients by normal subgroups") {
  const GroupTable Q8 = build(Family::kQuaternion, 3);
  const GroupTable D8 = build(Family::kDihedral, 3);
  const GroupTable V = direct_product(cyclic_group(1), cyclic_group(1));
  const Quotient q1 = quotient(Q8, center(Q8));
  CHECK(oracle::isomorphism_count(q1.table, V) > 0);
  const Quotient q2 = quotient(D8, center(D8));
  CHECK(oracle::isomorphism_count(q2.table, V) > 0);
  const Quotient q3 = quotient(D8, D8.all());
  CHECK(q3.table.order() == 1);
  // The projection is a homomorphism on all pairs.
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      CHECK(q2.projection[D8.mul(Elem(a), Elem(b))] == q2.table.mul(q2.projection[a], q2.projection[b]));
  CHECK(code_of([&] { quotient(D8, to_set(std::vector<Elem>{0, 1})); }) == ErrorCode::kNotNormal);
}

TEST_CASE("wreath product modulo its Frattini subgroup has order 4") {
  for (int n = 1; n <= 3; ++n) {
    const GroupTable W = build(Family::kWreath, n);
    CHECK(quotient(W, frattini(W, W.all())).table.order() == 4);
  }
}

TEST_CASE("generated_subgroup") {
  const GroupTable D8 = build(Family::kDihedral, 3);
  const Elem r = 2;  // v
  CHECK(generated_subgroup(D8, std::vector<Elem>{r}).order() == 4);
  CHECK(generated_subgroup(D8, std::vector<Elem>{}).order() == 1);
  const GroupTable Q8 = build(Family::kQuaternion, 3);
  CHECK(generated_subgroup(Q8, std::vector<Elem>{2, 1}).order() == 8);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const std::vector<Elem> g{Elem(a), Elem(b)};
      CHECK(generated_subgroup(D8, g).mask() == oracle::close(D8, to_set(g)));
    }
}

TEST_CASE("SubgroupRef validates closure") {
  const GroupTable D8 = build(Family::kDihedral, 3);
  CHECK(code_of([&] { SubgroupRef(D8, to_set(std::vector<Elem>{0, 2})); }) == ErrorCode::kNotSubgroup);
  CHECK(code_of([&] { SubgroupRef(D8, to_set(std::vector<Elem>{1})); }) == ErrorCode::kNotSubgroup);
  const SubgroupRef S(D8, to_set(std::vector<Elem>{0, 1}));
  CHECK(S.elements() == std::vector<Elem>{0, 1});
  CHECK(8 % S.order() == 0);
}

TEST_CASE("the split and nonsplit presentations with minimal i coincide") {
  for (auto [n, m] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
    const int i = std::max(2, n - m + 1);
    CAPTURE(n);
    CAPTURE(m);
    const GroupTable A = construct_family({Family::kJanko, n, m, i, 0, 0});
    const GroupTable B = construct_family({Family::kJanko, n, m, i, 1, 0});
    if (n - m + 1 >= 2) CHECK(isomorphic(A, B).has_value());
  }
}

TEST_CASE("group files round-trip and reject tampering") {
  const GroupTable G = construct_family({Family::kJanko, 2, 2, 2, 0, 0});
  const auto path = std::filesystem::temp_directory_path() / "bicyclic_roundtrip.json";
  write_group_file(path, G);
  const GroupTable H = read_group_file(path);
  CHECK(H == G);
  CHECK(H.labels() == G.labels());
  nlohmann::json j = group_to_json(G);
  j["mult"][5] = 0;
  CHECK_THROWS_AS(group_from_json(j), Error);
  nlohmann::json k = group_to_json(G);
  k.erase("mult");
  CHECK(code_of([&] { group_from_json(k); }) == ErrorCode::kParseError);
  std::filesystem::remove(path);
}

TEST_CASE("builders are byte-for-byte reproducible") {
  for (const FamilySpec& s : family_specs_of_order(6)) CHECK(construct_family(s) == construct_family(s));
}
