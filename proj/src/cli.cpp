#include "bicyclic/cli.hpp"

#include <chrono>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicyclic/census.hpp"
#include "bicyclic/error.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/fusion.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/numtheory.hpp"
#include "bicyclic/report.hpp"
#include "bicyclic/serialize.hpp"
#include "bicyclic/subgroups.hpp"

namespace bicyclic::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string family;
  std::optional<int> n, m, i;
  int xsq = 0, apow = 0;
  std::optional<long long> order;
  std::string input;
  std::string out_path;
  int max_order = 5;
  std::string cache;
  unsigned jobs = 1;
  std::size_t budget = kDefaultSubgroupBudget;
  std::string format = "json";
  unsigned r_max = 24;
  unsigned i_max = 64;
  std::optional<unsigned> param;
};

FamilySpec spec_from_options(const Options& o) {
  auto fam = family_from_string(o.family);
  if (!fam) throw Error(ErrorCode::kBadParameters, "unknown family '" + o.family + "'");
  FamilySpec s{*fam, o.n.value_or(0), o.m.value_or(0), o.i.value_or(0), o.xsq, o.apow};
  if (o.order) {
    const long long ord = *o.order;
    if (ord < 1 || !is_power_of_two(std::size_t(ord)) || std::size_t(ord) > kMaxOrder)
      throw Error(ErrorCode::kBadParameters, "--order must be a power of two up to 256");
    const int want = log2_exact(std::size_t(ord));
    if (o.n) {
      validate(s);
      if (predicted_log_order(s) != want)
        throw Error(ErrorCode::kBadParameters, "--order disagrees with the other parameters");
      return s;
    }
    for (int n = 1; n <= 8; ++n) {
      FamilySpec t = s;
      t.n = n;
      try {
        validate(t);
      } catch (const Error&) {
        continue;
      }
      if (predicted_log_order(t) == want) return t;
    }
    throw Error(ErrorCode::kBadParameters, "no parameter n gives order " + std::to_string(ord));
  }
  validate(s);
  return s;
}

// The group named by a positional file or by --family flags.
GroupTable input_group(const Options& o, json& inputs) {
  if (!o.input.empty()) {
    inputs["file"] = o.input;
    return read_group_file(o.input);
  }
  if (o.family.empty()) throw Error(ErrorCode::kBadParameters, "give a group file or --family");
  const FamilySpec s = spec_from_options(o);
  inputs["spec"] = spec_to_json(s);
  inputs["family"] = describe(s);
  return construct_family(s);
}

CensusOptions census_options(const Options& o, json& inputs) {
  CensusOptions c;
  c.jobs = std::max(1u, o.jobs);
  c.budget = o.budget;
  if (!o.cache.empty()) {
    c.cache_dir = o.cache;
    inputs["cache"] = o.cache;
  }
  inputs["max_order"] = o.max_order;
  return c;
}

json violation(const std::string& check, const std::string& subject, const std::string& detail) {
  return {{"check", check}, {"subject", subject}, {"detail", detail}};
}

void run_construct(const Options& o, ReportEnvelope& env) {
  const FamilySpec s = spec_from_options(o);
  env.inputs["spec"] = spec_to_json(s);
  const GroupTable G = construct_family(s);
  env.results = {{"family", describe(s)},
                 {"order", G.order()},
                 {"log_order", log2_exact(G.order())},
                 {"fingerprint", fingerprint(G).digest()}};
  if (!o.out_path.empty()) {
    write_group_file(o.out_path, G);
    env.results["file"] = o.out_path;
  } else {
    env.results["group"] = group_to_json(G);
  }
}

void run_analyze(const Options& o, ReportEnvelope& env) {
  const GroupTable G = input_group(o, env.inputs);
  env.results = {{"order", G.order()},
                 {"invariants", to_json(structural_invariants(G))},
                 {"shape", to_json(classify_shape(G))},
                 {"fingerprint", to_json(fingerprint(G))}};
  if (G.is_abelian()) env.results["abelian_invariants"] = abelian_invariants(G, G.all());
}

void run_subgroups(const Options& o, ReportEnvelope& env) {
  const GroupTable G = input_group(o, env.inputs);
  const SubgroupLattice L = all_subgroups(G, o.budget);
  json by_order = json::object();
  for (const auto& [ord, idx] : L.by_order) by_order[std::to_string(ord)] = idx.size();
  json classes = json::array();
  for (const SubgroupClass& c : subgroup_conjugacy_classes(G, L)) {
    const ElementSet& H = L.subgroups[c.representative];
    json rep = json::array();
    for (Elem e : to_vector(H)) rep.push_back(e);
    classes.push_back({{"order", H.count()}, {"size", c.members.size()}, {"normal", c.members.size() == 1},
                       {"representative", rep}});
  }
  env.results = {{"order", G.order()}, {"subgroup_count", L.size()}, {"by_order", by_order},
                 {"class_count", classes.size()}, {"classes", classes}};
}

void run_essential(const Options& o, ReportEnvelope& env) {
  const GroupTable G = input_group(o, env.inputs);
  const auto reports = essential_candidates(G, o.budget);
  json cands = json::array();
  for (const auto& r : reports)
    if (r.candidate()) cands.push_back(to_json(r));
  env.results = {{"order", G.order()}, {"classes_examined", reports.size()}, {"candidate_count", cands.size()},
                 {"candidates", cands}};
}

void run_fusion(const Options& o, ReportEnvelope& env) {
  const GroupTable G = input_group(o, env.inputs);
  FusionVerdict v = admits_nonnilpotent(G, o.budget);
  try {
    match_classification_case(G, v);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnmatchedGroup) throw;
    env.violations.push_back(violation("classification_match", "input", e.what()));
  }
  json checks = json::array();
  for (const StructuralCheck& s : structural_checks(G, v.candidate_classes)) {
    checks.push_back(to_json(s));
    if (!s.passed)
      env.violations.push_back(violation("structural_" + s.check, "candidate " + std::to_string(s.class_index), s.detail));
  }
  env.results = {{"order", G.order()}, {"verdict", to_json(v)}, {"structural_checks", checks}};
}

void run_census(const Options& o, ReportEnvelope& env) {
  const Census c = bicyclic_census(o.max_order, census_options(o, env.inputs));
  json layers = json::array();
  for (const CensusLayer& l : c.layers) {
    json recs = json::array();
    for (const CensusRecord& r : l.records) {
      recs.push_back(to_json(r));
      for (const std::string& e : r.errors)
        env.violations.push_back(violation("classification_match", "order" + std::to_string(l.N) + "_idx" +
                                                                   std::to_string(r.index), e));
    }
    for (const std::string& d : l.janko_disagreements)
      env.violations.push_back(violation("janko_equivalence", "order" + std::to_string(l.N), d));
    layers.push_back({{"N", l.N}, {"record_count", l.records.size()}, {"from_cache", l.from_cache},
                      {"extensions_examined", l.extensions_examined}, {"rank_two_extensions", l.rank_two_extensions},
                      {"records", recs}});
  }
  env.results = {{"layers", layers}};
}

void run_count(const Options& o, ReportEnvelope& env) {
  const Census c = bicyclic_census(o.max_order, census_options(o, env.inputs));
  json table = json::array();
  for (const CountRow& r : count_table(c, o.max_order)) {
    if (r.N < 2) continue;
    table.push_back(to_json(r));
    if (r.f_empirical != r.f_formula || r.g_empirical != r.g_formula)
      env.violations.push_back(violation("count", "N=" + std::to_string(r.N), to_json(r).dump()));
  }
  env.results = {{"table", table}};
}

void run_verify(const Options& o, ReportEnvelope& env) {
  const Census c = bicyclic_census(o.max_order, census_options(o, env.inputs));
  const VerifyReport rep = verify_suite(c, o.max_order, o.budget);
  json counts = json::array();
  for (const CountRow& r : rep.counts) counts.push_back(to_json(r));
  for (const Violation& v : rep.violations) env.violations.push_back(to_json(v));
  env.results = {{"checks_run", rep.checks_run}, {"counts", counts}, {"collisions", rep.collisions}};
}

void run_numtheory(const Options& o, ReportEnvelope& env) {
  std::vector<ExponentFamily> fams{ExponentFamily::kSL2, ExponentFamily::kSz, ExponentFamily::kPSU3};
  std::optional<ExponentFamily> chosen;
  if (!o.family.empty()) {
    chosen = exponent_family_from_string(o.family);
    if (!chosen) throw Error(ErrorCode::kBadParameters, "numtheory --family must be GL2, SL2, Sz or PSU3");
    env.inputs["family"] = o.family;
  }
  env.inputs["r_max"] = o.r_max;
  env.inputs["i_max"] = o.i_max;

  bool identity_holds = true;
  for (unsigned i = 1; i <= o.i_max; ++i) {
    BigInt prod = 1;
    for (unsigned d = 1; d <= i; ++d)
      if (i % d == 0) prod *= phi_at_2(d);
    if (prod != (BigInt(1) << i) - 1) {
      identity_holds = false;
      env.violations.push_back(violation("cyclotomic_identity", "i=" + std::to_string(i), "product mismatch"));
    }
  }
  env.results["cyclotomic_identity"] = {{"i_max", o.i_max}, {"holds", identity_holds}};

  if (chosen && o.param) {
    env.inputs["param"] = *o.param;
    env.results["exponent"] = to_json(group_exponent(*chosen, *o.param));
  }
  json scans = json::array();
  for (ExponentFamily f : fams) {
    if (chosen && *chosen != f) continue;
    const SectionBoundReport rep = section_bound_verify(f, o.r_max);
    for (const std::string& s : rep.failures) env.violations.push_back(violation("section_bound", to_string(f), s));
    scans.push_back(to_json(rep));
  }
  env.results["section_bounds"] = scans;
}

void add_group_flags(CLI::App* sub, Options& o, bool positional) {
  sub->add_option("--family", o.family, "Family name, e.g. dihedral, janko");
  sub->add_option("--n", o.n, "Parameter n");
  sub->add_option("--m", o.m, "Parameter m");
  sub->add_option("--i", o.i, "Parameter i (janko)");
  sub->add_option("--xsq", o.xsq, "x^2 = z^xsq (janko)");
  sub->add_option("--apow", o.apow, "a^(2^m) = z^apow (janko)");
  sub->add_option("--order", o.order, "Group order; selects n when --n is absent");
  if (positional) sub->add_option("input", o.input, "Group file");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Construct bicyclic 2-groups, detect essential-subgroup candidates and verify the census."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cache", o.cache, "Census cache directory");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", o.budget, "Subgroup enumeration budget");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  using Handler = void (*)(const Options&, ReportEnvelope&);
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto* construct = app.add_subcommand("construct", "Build a family presentation and write a group file");
  add_group_flags(construct, o, false);
  construct->add_option("--out", o.out_path, "Output group file");
  subs.push_back({construct, run_construct});

  const std::pair<const char*, Handler> group_cmds[] = {
      {"analyze", run_analyze}, {"subgroups", run_subgroups}, {"essential", run_essential}, {"fusion", run_fusion}};
  const char* group_help[] = {"Structural invariants and shape tags", "Subgroup lattice and conjugacy classes",
                              "Essential-subgroup candidates", "Fusion verdict, classification case and checks"};
  for (std::size_t k = 0; k < 4; ++k) {
    auto* sub = app.add_subcommand(group_cmds[k].first, group_help[k]);
    add_group_flags(sub, o, true);
    subs.push_back({sub, group_cmds[k].second});
  }

  const std::pair<const char*, Handler> census_cmds[] = {{"census", run_census}, {"count", run_count}, {"verify", run_verify}};
  const char* census_help[] = {"Enumerate bicyclic groups up to order 2^N", "Compare f(N), g(N) with the formulas",
                               "Run every census invariant"};
  for (std::size_t k = 0; k < 3; ++k) {
    auto* sub = app.add_subcommand(census_cmds[k].first, census_help[k]);
    sub->add_option("--max-order", o.max_order, "Largest log2 order N (1..7)")->check(CLI::Range(1, 7));
    subs.push_back({sub, census_cmds[k].second});
  }

  auto* nt = app.add_subcommand("numtheory", "Cyclotomic identities, exponents and section-bound scans");
  nt->add_option("--family", o.family, "GL2, SL2, Sz or PSU3");
  nt->add_option("--param", o.param, "Parameter for the exponent formula");
  nt->add_option("--r-max", o.r_max, "Largest r to scan")->check(CLI::Range(1u, 64u));
  nt->add_option("--i-max", o.i_max, "Largest i for the cyclotomic product identity")->check(CLI::Range(1u, 64u));
  subs.push_back({nt, run_numtheory});

  std::vector<std::string> argv_store{"bicyclic"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  ReportEnvelope env;
  Handler handler = nullptr;
  for (auto& [sub, h] : subs)
    if (sub->parsed()) {
      env.command = sub->get_name();
      handler = h;
    }
  env.inputs["jobs"] = o.jobs;
  env.inputs["budget"] = o.budget;

  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitPass;
  try {
    handler(o, env);
    env.finalize();
    code = env.status == ReportStatus::kPass ? kExitPass : kExitViolations;
  } catch (const Error& e) {
    env.status = ReportStatus::kError;
    env.results = {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    err << "error: " << e.what() << "\n";
    code = kExitUsage;
  } catch (const std::exception& e) {
    env.status = ReportStatus::kError;
    env.results = {{"error", {{"code", "internal"}, {"message", e.what()}}}};
    err << "error: " << e.what() << "\n";
    code = kExitUsage;
  }
  env.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.format == "text")
    out << render_text(env);
  else
    out << env.to_json().dump(2) << "\n";
  return code;
}

}  // namespace bicyclic::cli
