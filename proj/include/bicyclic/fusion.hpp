#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicyclic/families.hpp"
#include "bicyclic/group_table.hpp"
#include "bicyclic/morphisms.hpp"
#include "bicyclic/subgroups.hpp"

namespace bicyclic {

enum class IsoType { kC2sq, kQ8Small, kC2mxC2sq, kC2mxQ8, kC2mastQ8, kHomocyclic, kOther };
enum class NormalizerType { kWholeGroup, kD8xC2m, kQ16xC2m, kSD16xC2m, kQ16astC2m, kOther };

struct IsoTag {
  IsoType kind = IsoType::kOther;
  int m = 0;  // unused for C2sq, Q8_small, other
  friend bool operator==(const IsoTag&, const IsoTag&) = default;
};
struct NormalizerTag {
  NormalizerType kind = NormalizerType::kOther;
  int m = 0;
  friend bool operator==(const NormalizerTag&, const NormalizerTag&) = default;
};

std::string to_string(const IsoTag& t);        // e.g. "C2m_x_C2sq(m=1)"
std::string to_string(const NormalizerTag& t);  // e.g. "D8_x_C2m(m=0)"

// Conditions checked for a subgroup Q < P, with N = N_P(Q):
//   self_centralizing            C_P(Q) <= Q
//   norm_index_two               |N : Q| = 2
//   faithful_on_frattini_quotient every x in N \ Q acts nontrivially on Q/Phi(Q)
//   s3_realizable                some alpha in Aut(Q) of order 3 and the action of
//                                N on Q/Phi(Q) generate S_3 in GL(Q/Phi(Q))
// The last one is only searched when the first three hold.
struct EssentialConditions {
  bool self_centralizing = false;
  bool norm_index_two = false;
  bool faithful_on_frattini_quotient = false;
  bool s3_realizable = false;
  bool s3_evaluated = false;

  bool all() const noexcept {
    return self_centralizing && norm_index_two && faithful_on_frattini_quotient && s3_realizable;
  }
};

struct EssentialReport {
  SubgroupRef class_rep;
  std::size_t class_size = 0;
  int rank_of_q = 0;
  bool is_normal_in_p = false;
  EssentialConditions conditions;
  IsoTag iso_type;
  NormalizerTag normalizer_type;
  // alpha_witness[k] = image of the k-th smallest element of Q, as parent indices.
  std::optional<std::vector<Elem>> alpha_witness;

  bool candidate() const noexcept { return conditions.all(); }
};

// One report per conjugacy class of proper subgroups, in lattice order.
// Throws kRankTooHigh if a class representative has rank > 3.
std::vector<EssentialReport> essential_candidates(const GroupTable& P, std::size_t budget = kDefaultSubgroupBudget);

enum class VerdictReason { kEssentialCandidateExists, kAutNot2Group, kNone };
std::string to_string(VerdictReason r);

struct MatchedCase {
  int case_id = 1;                  // 1..14; 1 means only the nilpotent system
  std::optional<FamilySpec> spec;   // reference presentation, absent for case 1
};

// For the case with two systems differing by their centre: the two possible
// centre generators (images of a^2 and a^2 z from the reference presentation)
// and whether each is a square in P.
struct CenterCandidate {
  Elem element;
  bool is_square;
};

struct FusionVerdict {
  bool admits_nonnilpotent = false;
  VerdictReason reason = VerdictReason::kNone;
  std::vector<EssentialReport> candidate_classes;
  std::optional<MatchedCase> matched_case;
  int fs_count = 0;
  std::uint64_t aut_order = 0;
  bool aut_is_2_group = true;
  std::vector<CenterCandidate> center_candidates;
};

// Throws kNotBicyclic.
FusionVerdict admits_nonnilpotent(const GroupTable& P, std::size_t budget = kDefaultSubgroupBudget);
// Adds matched_case and fs_count. Throws kNotBicyclic and kUnmatchedGroup.
FusionVerdict fs_multiplicity(const GroupTable& P, std::size_t budget = kDefaultSubgroupBudget);
// Completes a verdict from admits_nonnilpotent (used by callers that already have one).
void match_classification_case(const GroupTable& P, FusionVerdict& v);

struct StructuralCheck {
  std::string check;  // "quotient_by_frattini", "core_decomposition", "derived_cyclic", "normalizer_shape"
  std::size_t class_index = 0;  // index into the candidate list
  bool passed = false;
  std::string detail;
};

// Checks for every rank-3 candidate:
//   quotient_by_frattini   N_P(Q)/Phi(Q) is D8 x C2 or minimal nonabelian of type (2,1)
//   core_decomposition     K = Core_P(Q) != 1, image of N in P/K is (Q/K) x Z(P/K), |Z(P/K)| = 2
//   derived_cyclic         Q normal => P' cyclic
//   normalizer_shape       Q not normal => N_P(Q) is D8 x C, Q16 x C or Q16 * C
std::vector<StructuralCheck> structural_checks(const GroupTable& P, const std::vector<EssentialReport>& candidates);

// Reference presentations of the classification, one per isomorphism class.
struct CatalogEntry {
  int case_id;
  FamilySpec spec;
  int fs_count;
  GroupTable table;
  Fingerprint fp;
};
// Cached per N; thread safe.
const std::vector<CatalogEntry>& classification_catalog(int N);
// (case_id, fs_count) specs of order 2^N without constructing tables.
std::vector<std::pair<int, FamilySpec>> classification_specs(int N);
int classification_fs_count(int case_id, const FamilySpec& spec);

// Reference group for a tag, built once and cached; nullopt-like empty table
// (order 1) when the tag has no construction.
const GroupTable& iso_reference(const IsoTag& t);
const GroupTable& normalizer_reference(const NormalizerTag& t);

IsoTag classify_iso_type(const GroupTable& Q);
NormalizerTag classify_normalizer(const GroupTable& N);

}  // namespace bicyclic
