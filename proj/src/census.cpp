#include "bicyclic/census.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "bicyclic/error.hpp"
#include "bicyclic/serialize.hpp"
#include "bicyclic/subgroup_ops.hpp"
#include "bicyclic/subgroups.hpp"

namespace bicyclic {

namespace {

// Runs fn(0..count-1) on up to `jobs` threads. Results must be written to
// per-index slots; the first exception is rethrown after joining.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= count) return;
        try {
          fn(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct Candidate {
  GroupTable table;
  Fingerprint fp;
  std::string digest;
};

struct BaseResult {
  std::vector<Candidate> bicyclic;
  std::size_t examined = 0;
  std::size_t rank_two = 0;
  std::vector<std::string> janko_disagreements;
};

BaseResult extend_base(const CensusRecord& base, int h2_cap) {
  BaseResult out;
  std::vector<GroupTable> exts;
  try {
    exts = central_extensions(base.canonical_rep, h2_cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kH2TooLarge) throw;
    throw Error(ErrorCode::kH2TooLarge, "base group order2^" + std::to_string(base.log_order) + "#" +
                                            std::to_string(base.index) + ": " + e.what());
  }
  out.examined = exts.size();
  for (std::size_t k = 0; k < exts.size(); ++k) {
    GroupTable& E = exts[k];
    if (rank_of(E, E.all()) > 2) continue;
    ++out.rank_two;
    const bool bic = is_bicyclic(E);
    if (janko_criterion(E) != bic) {
      out.janko_disagreements.push_back("extension " + std::to_string(k) + " of order2^" +
                                        std::to_string(base.log_order) + "#" + std::to_string(base.index) +
                                        (bic ? ": bicyclic but criterion fails" : ": criterion holds but not bicyclic"));
    }
    if (!bic) continue;
    Fingerprint fp = fingerprint(E);
    std::string d = fp.digest();
    out.bicyclic.push_back({std::move(E), std::move(fp), std::move(d)});
  }
  return out;
}

struct FamilyRef {
  FamilySpec spec;
  GroupTable table;
  Fingerprint fp;
};

const std::vector<FamilyRef>& family_refs(int N) {
  static std::mutex mu;
  static std::map<int, std::vector<FamilyRef>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  std::vector<FamilyRef> refs;
  for (const FamilySpec& s : family_specs_of_order(N)) {
    GroupTable t = construct_family(s);
    Fingerprint fp = fingerprint(t);
    refs.push_back({s, std::move(t), std::move(fp)});
  }
  return cache.emplace(N, std::move(refs)).first->second;
}

std::string record_name(int N, std::size_t idx) {
  return "order" + std::to_string(N) + "_idx" + std::to_string(idx);
}

// --- cache -----------------------------------------------------------------

constexpr const char* kManifestName = "manifest.json";

nlohmann::json read_manifest(const std::filesystem::path& dir) {
  const auto path = dir / kManifestName;
  if (!std::filesystem::exists(path)) return nlohmann::json{{"format", "bicyclic-census-cache"}, {"version", 1},
                                                            {"layers", nlohmann::json::object()}};
  std::ifstream in(path);
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("format", "") != "bicyclic-census-cache" || !j.contains("layers"))
      throw Error(ErrorCode::kCacheCorrupt, "manifest has unexpected format: " + path.string());
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kCacheCorrupt, "unreadable manifest " + path.string() + ": " + e.what());
  }
}

std::optional<std::vector<CensusRecord>> load_layer(const std::filesystem::path& dir, int N) {
  const nlohmann::json manifest = read_manifest(dir);
  const std::string key = std::to_string(N);
  if (!manifest["layers"].contains(key)) return std::nullopt;
  std::vector<CensusRecord> out;
  for (const auto& entry : manifest["layers"][key]) {
    const std::string file = entry.at("file").get<std::string>();
    const std::string want = entry.at("digest").get<std::string>();
    GroupTable t;
    try {
      t = read_group_file(dir / file);
    } catch (const Error& e) {
      throw Error(ErrorCode::kCacheCorrupt, "cache file " + file + ": " + e.what());
    }
    CensusRecord r;
    r.log_order = N;
    r.index = out.size();
    r.fingerprint = fingerprint(t);
    if (r.fingerprint.digest() != want)
      throw Error(ErrorCode::kCacheCorrupt, "fingerprint mismatch for " + file + ": manifest " + want +
                                                ", file " + r.fingerprint.digest());
    r.canonical_rep = std::move(t);
    out.push_back(std::move(r));
  }
  return out;
}

void save_layer(const std::filesystem::path& dir, const CensusLayer& layer) {
  std::filesystem::create_directories(dir);
  nlohmann::json manifest = read_manifest(dir);
  nlohmann::json entries = nlohmann::json::array();
  for (const CensusRecord& r : layer.records) {
    const std::string file = record_name(layer.N, r.index) + ".json";
    write_group_file(dir / file, r.canonical_rep);
    entries.push_back({{"file", file}, {"digest", r.fingerprint.digest()}});
  }
  manifest["layers"][std::to_string(layer.N)] = entries;
  std::ofstream out(dir / kManifestName);
  out << manifest.dump(2) << "\n";
}

}  // namespace

void analyze_record(CensusRecord& r, std::size_t budget) {
  const GroupTable& G = r.canonical_rep;
  if (r.fingerprint.order != G.order()) r.fingerprint = fingerprint(G);
  r.shape = classify_shape(G);
  r.derived_cyclic = is_cyclic(G, derived(G, G.all()));
  r.verdict = admits_nonnilpotent(G, budget);
  try {
    match_classification_case(G, r.verdict);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnmatchedGroup) throw;
    r.errors.push_back(e.what());
  }
  r.matched_family.reset();
  for (const FamilyRef& f : family_refs(log2_exact(G.order()))) {
    if (!(f.fp == r.fingerprint)) continue;
    if (find_isomorphism(f.table, G)) {
      r.matched_family = f.spec;
      break;
    }
  }
}

Census bicyclic_census(int N_max, const CensusOptions& opts) {
  if (N_max < 1 || N_max > 7) throw Error(ErrorCode::kOutOfRange, "census supports 1 <= N <= 7");
  Census c;
  for (int N = 1; N <= N_max; ++N) {
    CensusLayer layer;
    layer.N = N;
    std::optional<std::vector<CensusRecord>> cached;
    if (opts.cache_dir) cached = load_layer(*opts.cache_dir, N);
    if (cached) {
      layer.records = std::move(*cached);
      layer.from_cache = true;
    } else if (N == 1) {
      CensusRecord r;
      r.log_order = 1;
      r.canonical_rep = cyclic_group(1);
      r.fingerprint = fingerprint(r.canonical_rep);
      layer.records.push_back(std::move(r));
    } else {
      const auto& bases = c.layers.back().records;
      std::vector<BaseResult> results(bases.size());
      parallel_for(bases.size(), opts.jobs, [&](std::size_t k) { results[k] = extend_base(bases[k], opts.h2_cap); });
      std::map<std::string, std::vector<std::size_t>> buckets;
      for (BaseResult& br : results) {
        layer.extensions_examined += br.examined;
        layer.rank_two_extensions += br.rank_two;
        for (auto& s : br.janko_disagreements) layer.janko_disagreements.push_back(std::move(s));
        for (Candidate& cand : br.bicyclic) {
          auto& bucket = buckets[cand.digest];
          bool seen = false;
          for (std::size_t idx : bucket) {
            const CensusRecord& r = layer.records[idx];
            if (r.fingerprint == cand.fp && find_isomorphism(r.canonical_rep, cand.table)) {
              seen = true;
              break;
            }
          }
          if (seen) continue;
          CensusRecord r;
          r.log_order = N;
          r.index = layer.records.size();
          r.canonical_rep = std::move(cand.table);
          r.fingerprint = std::move(cand.fp);
          bucket.push_back(r.index);
          layer.records.push_back(std::move(r));
        }
      }
    }
    parallel_for(layer.records.size(), opts.jobs,
                 [&](std::size_t k) { analyze_record(layer.records[k], opts.budget); });
    if (opts.cache_dir && !layer.from_cache) save_layer(*opts.cache_dir, layer);
    if (opts.on_layer) opts.on_layer(N, layer.records.size());
    c.layers.push_back(std::move(layer));
  }
  return c;
}

int f_formula(int N) {
  if (N <= 1) return 0;
  if (N == 2) return 1;
  if (N == 3) return 2;
  if (N % 2 == 0) return 3 * N * N / 4 - 3 * N + 5;
  return (3 * N * N + 1) / 4 - 3 * N + 3;
}

int g_formula(int N) {
  if (N <= 1) return 0;
  if (N == 2) return 1;
  if (N == 3) return 3;
  if (N % 2 == 0) return 3 * N * N / 4 - 2 * N + 5;
  return (3 * N * N + 1) / 4 - 2 * N + 5;
}

std::vector<CountRow> count_table(const Census& c, int N_max) {
  std::vector<CountRow> rows;
  for (int N = 1; N <= std::min(N_max, c.max_log_order()); ++N) {
    CountRow row;
    row.N = N;
    for (const CensusRecord& r : c.layer(N).records) {
      if (r.verdict.admits_nonnilpotent) ++row.f_empirical;
      row.g_empirical += r.verdict.fs_count;
    }
    row.f_formula = f_formula(N);
    row.g_formula = g_formula(N);
    rows.push_back(row);
  }
  return rows;
}

std::optional<std::size_t> find_record(const Census& c, const GroupTable& G) {
  if (!is_power_of_two(G.order())) return std::nullopt;
  const int N = log2_exact(G.order());
  if (N < 1 || N > c.max_log_order()) return std::nullopt;
  const Fingerprint fp = fingerprint(G);
  for (const CensusRecord& r : c.layer(N).records)
    if (r.fingerprint == fp && find_isomorphism(r.canonical_rep, G)) return r.index;
  return std::nullopt;
}

namespace {

std::string subject_of(const CensusRecord& r) {
  std::string s = record_name(r.log_order, r.index);
  if (r.matched_family) s += " " + describe(*r.matched_family);
  return s;
}

bool is_homocyclic_rank2(const GroupTable& G, const ElementSet& H) {
  const auto inv = abelian_invariants(G, H);
  return inv.size() == 2 && inv[0] == inv[1];
}

}  // namespace

VerifyReport verify_suite(const Census& c, int N_max, std::size_t budget) {
  VerifyReport rep;
  N_max = std::min(N_max, c.max_log_order());
  auto fail = [&](std::string check, std::string subject, std::string detail) {
    rep.violations.push_back({std::move(check), std::move(subject), std::move(detail)});
  };
  auto check = [&](bool ok, const char* name, const std::string& subject, const std::string& detail) {
    ++rep.checks_run;
    if (!ok) fail(name, subject, detail);
  };

  for (int N = 1; N <= N_max; ++N) {
    const CensusLayer& layer = c.layer(N);
    for (const std::string& d : layer.janko_disagreements) fail("janko_equivalence", "order" + std::to_string(N), d);

    for (const CensusRecord& r : layer.records) {
      const GroupTable& P = r.canonical_rep;
      const ElementSet all = P.all();
      const std::string who = subject_of(r);
      const FusionVerdict& v = r.verdict;
      const bool meta = is_metacyclic(P);

      check(is_bicyclic(P), "record_bicyclic", who, "census record is not bicyclic");
      check(janko_criterion(P), "janko_equivalence", who, "bicyclic record fails the Janko criterion");
      for (const std::string& e : r.errors) fail("classification_match", who, e);
      check(v.admits_nonnilpotent == (v.fs_count > 0), "fs_count_consistency", who,
            "fs_count " + std::to_string(v.fs_count) + " vs admits " + std::to_string(v.admits_nonnilpotent));

      // Ranks of all subgroups and quotients.
      const SubgroupLattice L = all_subgroups(P, budget);
      const ElementSet phi = frattini(P, all);
      int worst_sub = 0, worst_quot = 0;
      for (const ElementSet& H : L.subgroups) {
        worst_sub = std::max(worst_sub, rank_of(P, H));
        if (is_normal(P, H, all)) {
          ElementSet hp = H | phi;
          worst_quot = std::max(worst_quot, log2_exact(P.order() / closure(P, hp).count()));
        }
      }
      check(worst_sub <= 3, "subgroup_rank", who, "subgroup of rank " + std::to_string(worst_sub));
      check(worst_quot <= 3, "quotient_rank", who, "quotient of rank " + std::to_string(worst_quot));

      // Automorphism groups that are not 2-groups.
      check(v.aut_is_2_group || r.shape.homocyclic || (P.order() == 8 && r.shape.quaternion), "biaut", who,
            "|Aut| = " + std::to_string(v.aut_order) + " is not a 2-power");

      // Noncyclic derived subgroup forces the nilpotent system only.
      if (!r.derived_cyclic)
        check(v.candidate_classes.empty() && v.aut_is_2_group, "cycliccom", who,
              "noncyclic derived subgroup but candidates or odd automorphisms exist");
      if (!meta)
        check(v.admits_nonnilpotent == r.derived_cyclic, "nonmetacyclic_iff_derived_cyclic", who,
              std::string("admits ") + (v.admits_nonnilpotent ? "yes" : "no") + ", stored derived_cyclic " +
                  (r.derived_cyclic ? "yes" : "no"));

      bool all_quaternionic = !v.candidate_classes.empty();
      for (std::size_t k = 0; k < v.candidate_classes.size(); ++k) {
        const EssentialReport& e = v.candidate_classes[k];
        const std::string cw = who + " candidate " + std::to_string(k);
        const std::size_t q = e.class_rep.order();
        const IsoType kind = e.iso_type.kind;
        check(kind != IsoType::kOther, "iso_type_known", cw, "candidate matches no reference type");
        if (e.rank_of_q == 3)
          check(kind == IsoType::kC2mxC2sq || kind == IsoType::kC2mxQ8 || kind == IsoType::kC2mastQ8, "biess", cw,
                "rank-3 candidate of type " + to_string(e.iso_type));
        if (e.rank_of_q == 2 && !meta)
          check(r.shape.wreath_C2n_C2 && kind == IsoType::kHomocyclic && 2 * q == P.order(), "rank2ess", cw,
                "rank-2 candidate " + to_string(e.iso_type) + " in a nonmetacyclic group");
        if (e.rank_of_q == 3 && !e.is_normal_in_p) {
          const NormalizerType nt = e.normalizer_type.kind;
          check(nt == NormalizerType::kD8xC2m || nt == NormalizerType::kQ16xC2m || nt == NormalizerType::kQ16astC2m,
                "essnotnormal", cw, "normalizer type " + to_string(e.normalizer_type));
        }
        const bool small = q <= 4 || (q == 8 && center(P, e.class_rep.mask()) != e.class_rep.mask());
        if (small) check(r.shape.maximal_class, "maxclass", cw, "small candidate in a group not of maximal class");
        all_quaternionic = all_quaternionic && (kind == IsoType::kC2mxQ8 || kind == IsoType::kC2mastQ8);
      }
      for (const StructuralCheck& s : structural_checks(P, v.candidate_classes))
        check(s.passed, ("structural_" + s.check).c_str(), who + " candidate " + std::to_string(s.class_index),
              s.detail);

      if (!meta && all_quaternionic) {
        const ElementSet Z = center(P, all);
        bool found = false;
        for (Elem z : to_vector(Z)) {
          if (P.elem_order(z) != 2) continue;
          bool fixed = true;
          for (const EssentialReport& e : v.candidate_classes) {
            if (!e.alpha_witness || !e.class_rep.contains(z)) {
              fixed = false;
              break;
            }
            const auto elems = e.class_rep.elements();
            const std::size_t pos = std::size_t(std::lower_bound(elems.begin(), elems.end(), z) - elems.begin());
            fixed = fixed && (*e.alpha_witness)[pos] == z;
          }
          if (fixed) {
            found = true;
            break;
          }
        }
        check(found, "centerfree", who, "no central involution fixed by every candidate's automorphism");
      }

      // Homocyclic subgroups of metacyclic groups outside maximal class.
      if (meta && !r.shape.maximal_class) {
        std::vector<ElementSet> omegas;
        for (int i = 0;; ++i) {
          omegas.push_back(i == 0 ? to_set(std::vector<Elem>{P.identity()}) : omega(P, all, i));
          if (omegas.back() == all) break;
        }
        for (const ElementSet& H : L.subgroups) {
          if (H.count() < 4 || center(P, H) != H || !is_homocyclic_rank2(P, H)) continue;
          check(std::find(omegas.begin(), omegas.end(), H) != omegas.end(), "metanormal", who,
                "homocyclic subgroup of order " + std::to_string(H.count()) + " is no Omega_i");
        }
      }

      // Closure: quotients by central involutions are earlier records.
      if (N >= 2) {
        for (Elem z : to_vector(center(P, all))) {
          if (P.elem_order(z) != 2) continue;
          const Quotient Qt = quotient(P, to_set(std::vector<Elem>{P.identity(), z}));
          check(find_record(c, Qt.table).has_value(), "quotient_closure", who,
                "quotient by central involution " + std::to_string(z) + " not in the census");
        }
      }
    }

    // Counts.
    const int fe = f_formula(N), ge = g_formula(N);
    int fo = 0, go = 0;
    for (const CensusRecord& r : layer.records) {
      fo += r.verdict.admits_nonnilpotent ? 1 : 0;
      go += r.verdict.fs_count;
    }
    check(fo == fe, "count_f", "order" + std::to_string(N),
          "empirical " + std::to_string(fo) + " vs formula " + std::to_string(fe));
    check(go == ge, "count_g", "order" + std::to_string(N),
          "empirical " + std::to_string(go) + " vs formula " + std::to_string(ge));

    // Completeness of the family constructions.
    std::map<std::size_t, std::vector<FamilySpec>> hits;
    for (const FamilyRef& f : family_refs(N)) {
      const bool bic = is_bicyclic(f.table);
      std::size_t matches = 0;
      for (const CensusRecord& r : layer.records) {
        if (!(r.fingerprint == f.fp) || !find_isomorphism(r.canonical_rep, f.table)) continue;
        ++matches;
        hits[r.index].push_back(f.spec);
      }
      check(matches == (bic ? 1u : 0u), "completeness", describe(f.spec),
            std::to_string(matches) + " matching records, bicyclic " + (bic ? "yes" : "no"));
    }
    for (const auto& [idx, specs] : hits) {
      if (specs.size() < 2) continue;
      std::string s = record_name(N, idx) + ":";
      for (const FamilySpec& f : specs) s += " " + describe(f);
      rep.collisions.push_back(s);
    }

    // Distinct classification presentations give distinct records.
    std::map<std::size_t, std::string> owner;
    for (const CatalogEntry& e : classification_catalog(N)) {
      std::optional<std::size_t> idx;
      for (const CensusRecord& r : layer.records)
        if (r.fingerprint == e.fp && find_isomorphism(r.canonical_rep, e.table)) {
          idx = r.index;
          break;
        }
      check(idx.has_value(), "catalog_in_census", describe(e.spec), "no census record");
      if (!idx) continue;
      auto [it, fresh] = owner.emplace(*idx, describe(e.spec));
      check(fresh, "catalog_distinct", describe(e.spec), "isomorphic to " + it->second);
    }

    if (N == 5) {
      std::size_t hits32 = 0;
      bool clean = true;
      for (const CensusRecord& r : layer.records) {
        const ElementSet D = derived(r.canonical_rep, r.canonical_rep.all());
        if (D.count() != 4 || is_cyclic(r.canonical_rep, D)) continue;
        clean = clean && r.verdict.candidate_classes.empty();
        // Uniqueness is claimed among those without an elementary abelian subgroup of order 8.
        if (structural_invariants(r.canonical_rep).two_rank <= 2) ++hits32;
      }
      check(hits32 == 1 && clean, "unique_order32_noncyclic_derived", "order5",
            std::to_string(hits32) + " groups with derived subgroup C2^2 and 2-rank 2, candidates empty " +
                (clean ? "yes" : "no"));
    }
  }
  rep.counts = count_table(c, N_max);
  return rep;
}

}  // namespace bicyclic
