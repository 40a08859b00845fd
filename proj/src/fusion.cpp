#include "bicyclic/fusion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "bicyclic/error.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/subgroup_ops.hpp"

namespace bicyclic {

namespace {

// Linear maps on F_2^r as column bitmasks.
using Matrix = std::vector<unsigned>;

unsigned apply(const Matrix& A, unsigned v) {
  unsigned out = 0;
  for (std::size_t j = 0; j < A.size(); ++j)
    if (v >> j & 1u) out ^= A[j];
  return out;
}

Matrix compose(const Matrix& A, const Matrix& B) {
  Matrix C(B.size());
  for (std::size_t j = 0; j < B.size(); ++j) C[j] = apply(A, B[j]);
  return C;
}

bool is_identity(const Matrix& A) {
  for (std::size_t j = 0; j < A.size(); ++j)
    if (A[j] != (1u << j)) return false;
  return true;
}

using Histogram = std::map<unsigned, std::size_t>;

Histogram order_histogram(const GroupTable& G, const ElementSet& H) {
  Histogram h;
  for (Elem x : to_vector(H)) ++h[G.elem_order(x)];
  return h;
}

struct Reference {
  GroupTable table;
  Fingerprint fp;
  Histogram orders;
};

const Reference& cached_reference(int slot, int m, const std::function<GroupTable()>& build) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Reference> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({slot, m});
  if (it == cache.end()) {
    GroupTable t = build();
    Fingerprint fp = fingerprint(t);
    Histogram h = order_histogram(t, t.all());
    it = cache.emplace(std::make_pair(slot, m), Reference{std::move(t), std::move(fp), std::move(h)}).first;
  }
  return it->second;
}

FamilySpec fam(Family f, int n, int m = 0) { return FamilySpec{f, n, m}; }

const Reference& iso_ref(const IsoTag& t) {
  return cached_reference(int(t.kind), t.m, [t]() -> GroupTable {
    switch (t.kind) {
      case IsoType::kC2sq: return construct_family(fam(Family::kHomocyclic, 1));
      case IsoType::kQ8Small: return construct_family(fam(Family::kQuaternion, 3));
      case IsoType::kC2mxC2sq: return construct_family(fam(Family::kDirectC2mxC2sq, 0, t.m));
      case IsoType::kC2mxQ8: return construct_family(fam(Family::kDirectC2mxQ8, 0, t.m));
      case IsoType::kC2mastQ8: return construct_family(fam(Family::kCentralC2mQ8, 0, t.m));
      case IsoType::kHomocyclic: return construct_family(fam(Family::kHomocyclic, t.m));
      case IsoType::kOther: break;
    }
    return GroupTable();
  });
}

const Reference& normalizer_ref(const NormalizerTag& t) {
  return cached_reference(100 + int(t.kind), t.m, [t]() -> GroupTable {
    switch (t.kind) {
      case NormalizerType::kD8xC2m:
        return direct_product(construct_family(fam(Family::kDihedral, 3)), cyclic_group(t.m));
      case NormalizerType::kQ16xC2m:
        return direct_product(construct_family(fam(Family::kQuaternion, 4)), cyclic_group(t.m));
      case NormalizerType::kSD16xC2m:
        return direct_product(construct_family(fam(Family::kSemidihedral, 4)), cyclic_group(t.m));
      case NormalizerType::kQ16astC2m: {
        GroupTable Q16 = construct_family(fam(Family::kQuaternion, 4));
        GroupTable C = cyclic_group(t.m);
        const Elem z = Q16.pow(2, 4);  // v^4, the central involution of Q16
        return amalgamate_involutions(Q16, z, C, Elem(1u << (t.m - 1)));
      }
      case NormalizerType::kWholeGroup:
      case NormalizerType::kOther: break;
    }
    return GroupTable();
  });
}

const Reference& mna21_ref() {
  return cached_reference(200, 0, [] { return construct_family(fam(Family::kMinNonabelian, 2, 1)); });
}

bool matches(const GroupTable& G, const Histogram& h, const Fingerprint* fp, const Reference& ref) {
  if (ref.table.order() != G.order() || ref.orders != h) return false;
  if (fp && !(*fp == ref.fp)) return false;
  return find_isomorphism(ref.table, G).has_value();
}

std::vector<IsoTag> iso_tags_for_order(int k) {
  std::vector<IsoTag> out;
  if (k == 2) out.push_back({IsoType::kC2sq, 0});
  if (k == 3) out.push_back({IsoType::kQ8Small, 0});
  if (k - 2 >= 1) out.push_back({IsoType::kC2mxC2sq, k - 2});
  if (k - 2 >= 2) out.push_back({IsoType::kC2mastQ8, k - 2});
  if (k - 3 >= 1) out.push_back({IsoType::kC2mxQ8, k - 3});
  if (k % 2 == 0 && k / 2 >= 2) out.push_back({IsoType::kHomocyclic, k / 2});
  return out;
}

std::vector<NormalizerTag> normalizer_tags_for_order(int k) {
  std::vector<NormalizerTag> out;
  if (k - 3 >= 0) out.push_back({NormalizerType::kD8xC2m, k - 3});
  if (k - 4 >= 0) out.push_back({NormalizerType::kQ16xC2m, k - 4});
  if (k - 4 >= 0) out.push_back({NormalizerType::kSD16xC2m, k - 4});
  if (k - 3 >= 2) out.push_back({NormalizerType::kQ16astC2m, k - 3});
  return out;
}

// Tags found by histogram pre-filter, then fingerprint and isomorphism.
template <typename Tag, typename RefFn>
std::optional<Tag> first_match(const GroupTable& P, const ElementSet& S, const std::vector<Tag>& tags, RefFn ref) {
  const Histogram h = order_histogram(P, S);
  std::optional<Embedded> emb;
  std::optional<Fingerprint> fp;
  for (const Tag& t : tags) {
    const Reference& r = ref(t);
    if (r.table.order() != S.count() || r.orders != h) continue;
    if (!emb) {
      emb = induced(P, S);
      fp = fingerprint(emb->table);
    }
    if (matches(emb->table, h, &*fp, r)) return t;
  }
  return std::nullopt;
}

IsoTag iso_tag_in(const GroupTable& P, const ElementSet& Q) {
  auto t = first_match(P, Q, iso_tags_for_order(log2_exact(Q.count())), iso_ref);
  return t ? *t : IsoTag{};
}

NormalizerTag normalizer_tag_in(const GroupTable& P, const ElementSet& N) {
  auto t = first_match(P, N, normalizer_tags_for_order(log2_exact(N.count())), normalizer_ref);
  return t ? *t : NormalizerTag{};
}

// Searches an order-3 automorphism of Q whose image in GL(Q/Phi(Q)) is
// inverted by the action t of N_P(Q).
std::optional<std::vector<Elem>> find_alpha(const GroupTable& P, const ElementSet& Q, const FrattiniCoordinates& fc,
                                            const Matrix& t) {
  const Embedded emb = induced(P, Q);
  const GroupTable& L = emb.table;
  const std::vector<Elem> lgens = minimal_generators(L);
  std::vector<Elem> basis_local;
  for (Elem b : fc.basis) basis_local.push_back(Elem(emb.from_parent[b]));
  std::optional<std::vector<Elem>> found;
  for_each_automorphism(L, [&](const std::vector<Elem>& alpha) {
    bool moves = false, cube = true;
    for (Elem g : lgens) {
      moves = moves || alpha[g] != g;
      cube = cube && alpha[alpha[alpha[g]]] == g;
    }
    if (!moves || !cube) return true;
    Matrix A(fc.basis.size());
    for (std::size_t j = 0; j < A.size(); ++j) A[j] = unsigned(fc.coord[emb.to_parent[alpha[basis_local[j]]]]);
    if (is_identity(A)) return true;
    const Matrix A2 = compose(A, A);
    if (compose(compose(t, A), t) != A2) return true;
    std::vector<Elem> w(L.order());
    for (std::size_t k = 0; k < L.order(); ++k) w[k] = emb.to_parent[alpha[k]];
    found = std::move(w);
    return false;
  });
  return found;
}

bool is_square_in(const GroupTable& P, Elem e) {
  for (std::size_t y = 0; y < P.order(); ++y)
    if (P.mul(Elem(y), Elem(y)) == e) return true;
  return false;
}

}  // namespace

std::string to_string(const IsoTag& t) {
  const std::string m = "(m=" + std::to_string(t.m) + ")";
  switch (t.kind) {
    case IsoType::kC2sq: return "C2sq";
    case IsoType::kQ8Small: return "Q8_small";
    case IsoType::kC2mxC2sq: return "C2m_x_C2sq" + m;
    case IsoType::kC2mxQ8: return "C2m_x_Q8" + m;
    case IsoType::kC2mastQ8: return "C2m_ast_Q8" + m;
    case IsoType::kHomocyclic: return "homocyclic" + m;
    case IsoType::kOther: break;
  }
  return "other";
}

std::string to_string(const NormalizerTag& t) {
  const std::string m = "(m=" + std::to_string(t.m) + ")";
  switch (t.kind) {
    case NormalizerType::kWholeGroup: return "whole_group";
    case NormalizerType::kD8xC2m: return "D8_x_C2m" + m;
    case NormalizerType::kQ16xC2m: return "Q16_x_C2m" + m;
    case NormalizerType::kSD16xC2m: return "SD16_x_C2m" + m;
    case NormalizerType::kQ16astC2m: return "Q16_ast_C2m" + m;
    case NormalizerType::kOther: break;
  }
  return "other";
}

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::kEssentialCandidateExists: return "essential_candidate_exists";
    case VerdictReason::kAutNot2Group: return "aut_not_2_group";
    case VerdictReason::kNone: break;
  }
  return "none";
}

const GroupTable& iso_reference(const IsoTag& t) { return iso_ref(t).table; }
const GroupTable& normalizer_reference(const NormalizerTag& t) { return normalizer_ref(t).table; }

IsoTag classify_iso_type(const GroupTable& Q) { return iso_tag_in(Q, Q.all()); }
NormalizerTag classify_normalizer(const GroupTable& N) { return normalizer_tag_in(N, N.all()); }

std::vector<EssentialReport> essential_candidates(const GroupTable& P, std::size_t budget) {
  const SubgroupLattice L = all_subgroups(P, budget);
  const auto classes = subgroup_conjugacy_classes(P, L);
  const ElementSet all = P.all();
  std::vector<EssentialReport> out;
  for (const SubgroupClass& c : classes) {
    const ElementSet& Q = L.subgroups[c.representative];
    if (Q.count() == P.order()) continue;
    EssentialReport r{L.ref(c.representative), 0, 0, false, {}, {}, {}, std::nullopt};
    r.class_size = c.members.size();
    const FrattiniCoordinates fc = frattini_coordinates(P, Q);
    r.rank_of_q = int(fc.basis.size());
    if (r.rank_of_q > 3) {
      throw Error(ErrorCode::kRankTooHigh,
                  "subgroup of order " + std::to_string(Q.count()) + " has rank " + std::to_string(r.rank_of_q));
    }
    const ElementSet N = normalizer(P, Q, all);
    r.is_normal_in_p = N == all;
    auto& e = r.conditions;
    e.self_centralizing = (centralizer(P, Q, all) & ~Q).none();
    e.norm_index_two = N.count() == 2 * Q.count();
    e.faithful_on_frattini_quotient = true;
    Elem outer = P.identity();
    bool have_outer = false;
    for (Elem x : to_vector(N & ~Q)) {
      if (!have_outer) {
        outer = x;
        have_outer = true;
      }
      bool moves = false;
      for (std::size_t j = 0; j < fc.basis.size() && !moves; ++j)
        moves = fc.coord[P.conj(x, fc.basis[j])] != int(1u << j);
      if (!moves) {
        e.faithful_on_frattini_quotient = false;
        break;
      }
    }
    if (e.self_centralizing && e.norm_index_two && e.faithful_on_frattini_quotient) {
      e.s3_evaluated = true;
      Matrix t(fc.basis.size());
      for (std::size_t j = 0; j < t.size(); ++j) t[j] = unsigned(fc.coord[P.conj(outer, fc.basis[j])]);
      r.alpha_witness = find_alpha(P, Q, fc, t);
      e.s3_realizable = r.alpha_witness.has_value();
    }
    r.iso_type = iso_tag_in(P, Q);
    r.normalizer_type = r.is_normal_in_p ? NormalizerTag{NormalizerType::kWholeGroup, 0} : normalizer_tag_in(P, N);
    out.push_back(std::move(r));
  }
  return out;
}

FusionVerdict admits_nonnilpotent(const GroupTable& P, std::size_t budget) {
  if (!is_bicyclic(P)) throw Error(ErrorCode::kNotBicyclic, "group is not a product of two cyclic subgroups");
  FusionVerdict v;
  for (auto& r : essential_candidates(P, budget))
    if (r.candidate()) v.candidate_classes.push_back(std::move(r));
  const AutGroup A = automorphisms(P);
  v.aut_order = A.order;
  v.aut_is_2_group = A.is_2_group;
  if (!v.candidate_classes.empty()) {
    v.reason = VerdictReason::kEssentialCandidateExists;
  } else if (!A.is_2_group) {
    v.reason = VerdictReason::kAutNot2Group;
  }
  v.admits_nonnilpotent = v.reason != VerdictReason::kNone;
  return v;
}

void match_classification_case(const GroupTable& P, FusionVerdict& v) {
  if (!v.admits_nonnilpotent) {
    v.matched_case = MatchedCase{1, std::nullopt};
    v.fs_count = 0;
    return;
  }
  const Fingerprint fp = fingerprint(P);
  for (const CatalogEntry& e : classification_catalog(log2_exact(P.order()))) {
    if (!(e.fp == fp)) continue;
    auto w = find_isomorphism(e.table, P);
    if (!w) continue;
    v.matched_case = MatchedCase{e.case_id, e.spec};
    v.fs_count = e.fs_count;
    if (e.fs_count == 2 && e.case_id == 10) {
      const GroupTable& R = e.table;
      const Elem a2 = 2;  // a^2 in the (e, f, g) normal form
      const Elem v_gen = Elem(2u << e.spec.m);
      const Elem z = R.pow(v_gen, 1LL << (e.spec.n - 1));
      for (Elem c : {a2, R.mul(a2, z)}) {
        const Elem img = w->map[c];
        v.center_candidates.push_back({img, is_square_in(P, img)});
      }
    }
    return;
  }
  throw Error(ErrorCode::kUnmatchedGroup,
              "group of order " + std::to_string(P.order()) + " admits a nonnilpotent system but matches no case");
}

FusionVerdict fs_multiplicity(const GroupTable& P, std::size_t budget) {
  FusionVerdict v = admits_nonnilpotent(P, budget);
  match_classification_case(P, v);
  return v;
}

std::vector<StructuralCheck> structural_checks(const GroupTable& P, const std::vector<EssentialReport>& candidates) {
  std::vector<StructuralCheck> out;
  const ElementSet all = P.all();
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const EssentialReport& r = candidates[k];
    if (!r.candidate() || r.rank_of_q != 3) continue;
    const ElementSet& Q = r.class_rep.mask();
    const ElementSet N = normalizer(P, Q, all);

    {
      const Embedded emb = induced(P, N);
      ElementSet phi_local;
      for (Elem f : to_vector(frattini(P, Q))) phi_local.set(emb.from_parent[f]);
      const Quotient q = quotient(emb.table, phi_local);
      const Histogram h = order_histogram(q.table, q.table.all());
      const Fingerprint fp = fingerprint(q.table);
      const bool d8c2 = matches(q.table, h, &fp, normalizer_ref({NormalizerType::kD8xC2m, 1}));
      const bool mna = !d8c2 && matches(q.table, h, &fp, mna21_ref());
      out.push_back({"quotient_by_frattini", k, d8c2 || mna,
                     d8c2 ? "D8 x C2" : (mna ? "minimal nonabelian (2,1)" : "neither")});
    }
    {
      const ElementSet K = core(P, Q, all);
      StructuralCheck c{"core_decomposition", k, false, ""};
      if (K.count() == 1) {
        c.detail = "core is trivial";
      } else {
        const Quotient q = quotient(P, K);
        ElementSet Nb, Qb;
        for (Elem x : to_vector(N)) Nb.set(q.projection[x]);
        for (Elem x : to_vector(Q)) Qb.set(q.projection[x]);
        const ElementSet Z = center(q.table);
        const bool inside = (Z & ~Nb).none();
        const bool trivial_meet = (Qb & Z).count() == 1;
        const bool sizes = Qb.count() * Z.count() == Nb.count();
        c.passed = inside && trivial_meet && sizes && Z.count() == 2;
        c.detail = "|K|=" + std::to_string(K.count()) + " |Z(P/K)|=" + std::to_string(Z.count());
      }
      out.push_back(c);
    }
    if (r.is_normal_in_p) {
      const bool cyc = is_cyclic(P, derived(P, all));
      out.push_back({"derived_cyclic", k, cyc, cyc ? "P' cyclic" : "P' not cyclic"});
    } else {
      const auto kind = r.normalizer_type.kind;
      const bool ok = kind == NormalizerType::kD8xC2m || kind == NormalizerType::kQ16xC2m ||
                      kind == NormalizerType::kQ16astC2m;
      out.push_back({"normalizer_shape", k, ok, to_string(r.normalizer_type)});
    }
  }
  return out;
}

int classification_fs_count(int case_id, const FamilySpec& spec) {
  switch (case_id) {
    case 1: return 0;
    case 3:
    case 5: return 2;
    case 6:
    case 7: return 3;
    case 10: return spec.i == spec.n ? 2 : 1;
    default: return 1;
  }
}

std::vector<std::pair<int, FamilySpec>> classification_specs(int N) {
  std::vector<std::pair<int, FamilySpec>> out;
  if (N % 2 == 0 && N >= 2) out.push_back({2, fam(Family::kHomocyclic, N / 2)});
  if (N >= 3) out.push_back({3, fam(Family::kDihedral, N)});
  if (N == 3) out.push_back({4, fam(Family::kQuaternion, 3)});
  if (N >= 4) out.push_back({5, fam(Family::kQuaternion, N)});
  if (N >= 4) out.push_back({6, fam(Family::kSemidihedral, N)});
  if (N % 2 == 1 && (N - 1) / 2 >= 2) out.push_back({7, fam(Family::kWreath, (N - 1) / 2)});
  if (N - 2 >= 2) out.push_back({8, fam(Family::kMinNonabelian, N - 2, 1)});
  auto janko = [](int n, int m, int i, int xs, int ap) { return FamilySpec{Family::kJanko, n, m, i, xs, ap}; };
  // Cases 9-14, grouped by case then n.
  for (int c = 9; c <= 14; ++c) {
    for (int n = 2; n <= N - 3; ++n) {
      const int m = N - 1 - n;
      if (m < 2) continue;
      const bool low_i_case = c == 9 || c == 11 || c == 13;
      if (low_i_case) {
        if (n <= m) continue;
        const int i = n - m + 1;
        const int xs = c == 9 ? 0 : 1;
        const int ap = c == 13 ? 0 : 1;
        out.push_back({c, janko(n, m, i, xs, ap)});
      } else {
        for (int i = std::max(2, n - m + 2); i <= n; ++i) {
          if (c == 14 && m == n && i == n) continue;
          const int xs = c == 10 ? 0 : 1;
          const int ap = c == 14 ? 1 : 0;
          out.push_back({c, janko(n, m, i, xs, ap)});
        }
      }
    }
  }
  return out;
}

const std::vector<CatalogEntry>& classification_catalog(int N) {
  static std::mutex mu;
  static std::map<int, std::vector<CatalogEntry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  std::vector<CatalogEntry> entries;
  for (auto& [c, spec] : classification_specs(N)) {
    GroupTable t = construct_family(spec);
    Fingerprint fp = fingerprint(t);
    entries.push_back({c, spec, classification_fs_count(c, spec), std::move(t), std::move(fp)});
  }
  return cache.emplace(N, std::move(entries)).first->second;
}

}  // namespace bicyclic
