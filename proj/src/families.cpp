#include "bicyclic/families.hpp"

#include <algorithm>
#include <array>

#include "bicyclic/error.hpp"
#include "bicyclic/subgroup_ops.hpp"

namespace bicyclic {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 12> kNames{{
    {Family::kCyclic, "cyclic"},
    {Family::kHomocyclic, "homocyclic"},
    {Family::kDihedral, "dihedral"},
    {Family::kQuaternion, "quaternion"},
    {Family::kSemidihedral, "semidihedral"},
    {Family::kModular, "modular"},
    {Family::kWreath, "wreath"},
    {Family::kMinNonabelian, "min_nonabelian"},
    {Family::kDirectC2mxC2sq, "direct_C2m_x_C2sq"},
    {Family::kDirectC2mxQ8, "direct_C2m_x_Q8"},
    {Family::kCentralC2mQ8, "central_C2m_Q8"},
    {Family::kJanko, "janko"},
}};

std::string power_label(const std::string& name, long long k) {
  if (k == 0) return "";
  if (k == 1) return name;
  return name + "^" + std::to_string(k);
}

std::string join_label(const std::string& a, const std::string& b) {
  if (a.empty() || a == "1") return b.empty() ? "1" : b;
  if (b.empty()) return a;
  return a + " " + b;
}

GroupTable cyclic_named(int n, const std::string& name) {
  const std::size_t N = std::size_t(1) << n;
  std::vector<Elem> mult(N * N);
  std::vector<std::string> labels(N);
  for (std::size_t a = 0; a < N; ++a) {
    labels[a] = a == 0 ? "1" : power_label(name, (long long)a);
    for (std::size_t b = 0; b < N; ++b) mult[a * N + b] = Elem((a + b) % N);
  }
  std::vector<Elem> gens;
  if (N > 1) gens.push_back(1);
  return make_table(N, std::move(mult), 0, gens, std::move(labels));
}

// E = base extended by an element t with t e t^-1 = phi(e) and t^exponent = power.
// Element (e, g) = e t^g has index e * exponent + g.
GroupTable cyclic_extension(const GroupTable& base, const std::vector<Elem>& phi, unsigned exponent,
                            Elem power, const std::string& name) {
  const std::size_t b = base.order();
  // phi must be an automorphism fixing `power`, with phi^exponent = conjugation by power.
  {
    std::vector<bool> hit(b, false);
    for (std::size_t e = 0; e < b; ++e) hit[phi[e]] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw Error(ErrorCode::kBadParameters, "extension map is not bijective");
    }
    for (std::size_t x = 0; x < b; ++x)
      for (std::size_t y = 0; y < b; ++y)
        if (phi[base.mul(Elem(x), Elem(y))] != base.mul(phi[x], phi[y])) {
          throw Error(ErrorCode::kBadParameters, "extension map is not a homomorphism");
        }
    if (phi[power] != power) throw Error(ErrorCode::kBadParameters, "extension map moves t^exponent");
  }
  std::vector<std::vector<Elem>> phi_pow(exponent, std::vector<Elem>(b));
  for (std::size_t e = 0; e < b; ++e) phi_pow[0][e] = Elem(e);
  for (unsigned k = 1; k < exponent; ++k)
    for (std::size_t e = 0; e < b; ++e) phi_pow[k][e] = phi[phi_pow[k - 1][e]];
  for (std::size_t e = 0; e < b; ++e) {
    if (phi[phi_pow[exponent - 1][e]] != base.conj(power, Elem(e))) {
      throw Error(ErrorCode::kBadParameters, "extension map has the wrong order");
    }
  }

  const std::size_t n = b * exponent;
  if (n > kMaxOrder) throw Error(ErrorCode::kOrderTooLarge, "extension exceeds order cap");
  std::vector<Elem> mult(n * n);
  for (std::size_t e1 = 0; e1 < b; ++e1)
    for (unsigned g1 = 0; g1 < exponent; ++g1)
      for (std::size_t e2 = 0; e2 < b; ++e2) {
        const Elem head = base.mul(Elem(e1), phi_pow[g1][e2]);
        const Elem wrapped = base.mul(head, power);
        for (unsigned g2 = 0; g2 < exponent; ++g2) {
          unsigned g = g1 + g2;
          Elem e = head;
          if (g >= exponent) {
            g -= exponent;
            e = wrapped;
          }
          mult[(e1 * exponent + g1) * n + e2 * exponent + g2] = Elem(e * exponent + g);
        }
      }

  std::vector<Elem> gens;
  for (Elem g : minimal_generators(base)) gens.push_back(Elem(g * exponent));
  if (exponent > 1) gens.push_back(Elem(base.identity() * exponent + 1));
  std::vector<std::string> labels;
  if (!base.labels().empty()) {
    for (std::size_t e = 0; e < b; ++e)
      for (unsigned g = 0; g < exponent; ++g)
        labels.push_back(join_label(base.labels()[e], power_label(name, g)));
  }
  return make_table(n, std::move(mult), Elem(base.identity() * exponent), gens, std::move(labels));
}

// <v> extended by x with x v x^-1 = v^mult and x^2 = v^sq_exp.
GroupTable cyclic_by_involution(int n, long long mult, long long sq_exp) {
  GroupTable V = cyclic_named(n, "v");
  const long long N = 1LL << n;
  std::vector<Elem> phi(static_cast<std::size_t>(N));
  for (long long e = 0; e < N; ++e) phi[e] = Elem(((e * mult) % N + N) % N);
  return cyclic_extension(V, phi, 2, Elem(sq_exp % N), "x");
}

GroupTable janko(const FamilySpec& s) {
  const long long N = 1LL << s.n;
  const long long z = N / 2;
  GroupTable E = cyclic_by_involution(s.n, -1, s.x_sq ? z : 0);
  // In E, v^e x^f has index 2e + f.
  const Elem v = 2, x = 1;
  const long long r = ((-1 + (1LL << s.i)) % N + N) % N;
  const Elem v_img = E.pow(v, r);
  const Elem x_img = E.mul(v, x);
  std::vector<Elem> phi(E.order());
  for (long long e = 0; e < N; ++e)
    for (int f = 0; f < 2; ++f)
      phi[std::size_t(2 * e + f)] = E.mul(E.pow(v_img, e), f ? x_img : E.identity());
  const Elem zE = E.pow(v, z);
  return cyclic_extension(E, phi, 1u << s.m, s.a_pow ? zE : E.identity(), "a");
}

std::size_t index_of_family(Family f) {
  for (std::size_t k = 0; k < kNames.size(); ++k)
    if (kNames[k].first == f) return k;
  return 0;
}

}  // namespace

std::string_view to_string(Family f) { return kNames[index_of_family(f)].second; }

std::optional<Family> family_from_string(std::string_view name) {
  for (auto& [f, s] : kNames)
    if (s == name) return f;
  return std::nullopt;
}

std::string describe(const FamilySpec& s) {
  std::string name(to_string(s.family));
  auto p = [](const char* k, int v) { return std::string(k) + "=" + std::to_string(v); };
  switch (s.family) {
    case Family::kCyclic:
    case Family::kHomocyclic:
    case Family::kWreath:
      return name + "(" + p("n", s.n) + ")";
    case Family::kDihedral:
    case Family::kQuaternion:
    case Family::kSemidihedral:
    case Family::kModular:
      return name + "(order=2^" + std::to_string(s.n) + ")";
    case Family::kMinNonabelian:
      return name + "(" + p("r", s.n) + "," + p("s", s.m) + ")";
    case Family::kDirectC2mxC2sq:
    case Family::kDirectC2mxQ8:
    case Family::kCentralC2mQ8:
      return name + "(" + p("m", s.m) + ")";
    case Family::kJanko:
      return name + "(" + p("n", s.n) + "," + p("m", s.m) + "," + p("i", s.i) + "," + p("x_sq", s.x_sq) +
             "," + p("a_pow", s.a_pow) + ")";
  }
  return name;
}

int predicted_log_order(const FamilySpec& s) {
  switch (s.family) {
    case Family::kCyclic: return s.n;
    case Family::kHomocyclic: return 2 * s.n;
    case Family::kDihedral:
    case Family::kQuaternion:
    case Family::kSemidihedral:
    case Family::kModular: return s.n;
    case Family::kWreath: return 2 * s.n + 1;
    case Family::kMinNonabelian: return s.n + s.m + 1;
    case Family::kDirectC2mxC2sq: return s.m + 2;
    case Family::kDirectC2mxQ8: return s.m + 3;
    case Family::kCentralC2mQ8: return s.m + 2;
    case Family::kJanko: return s.n + s.m + 1;
  }
  return 0;
}

void validate(const FamilySpec& s) {
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::kBadParameters, describe(s) + ": " + why);
  };
  if (s.n < 0 || s.m < 0 || s.i < 0) bad("parameters must be nonnegative");
  if (s.family != Family::kJanko && (s.i != 0 || s.x_sq != 0 || s.a_pow != 0)) {
    bad("i, x_sq and a_pow only apply to the janko family");
  }
  switch (s.family) {
    case Family::kCyclic:
      if (s.m != 0) bad("m unused");
      break;
    case Family::kHomocyclic:
    case Family::kWreath:
      if (s.n < 1) bad("requires n >= 1");
      if (s.m != 0) bad("m unused");
      break;
    case Family::kDihedral:
    case Family::kQuaternion:
      if (s.n < 3) bad("requires order at least 2^3");
      if (s.m != 0) bad("m unused");
      break;
    case Family::kSemidihedral:
    case Family::kModular:
      if (s.n < 4) bad("requires order at least 2^4");
      if (s.m != 0) bad("m unused");
      break;
    case Family::kMinNonabelian:
      if (!(s.n >= s.m && s.m >= 1)) bad("requires r >= s >= 1");
      break;
    case Family::kDirectC2mxC2sq:
    case Family::kDirectC2mxQ8:
      if (s.m < 1) bad("requires m >= 1");
      if (s.n != 0) bad("n unused");
      break;
    case Family::kCentralC2mQ8:
      if (s.m < 2) bad("requires m >= 2");
      if (s.n != 0) bad("n unused");
      break;
    case Family::kJanko:
      if (s.n < 2 || s.m < 1) bad("requires n >= 2 and m >= 1");
      if (s.i < std::max(2, s.n - s.m + 1) || s.i > s.n) bad("requires max(2, n-m+1) <= i <= n");
      if ((s.x_sq != 0 && s.x_sq != 1) || (s.a_pow != 0 && s.a_pow != 1)) bad("x_sq, a_pow are bits");
      break;
  }
  if (predicted_log_order(s) > 8) {
    throw Error(ErrorCode::kOrderTooLarge, describe(s) + ": order exceeds 2^8");
  }
}

GroupTable cyclic_group(int n) {
  if (n < 0 || n > 8) throw Error(ErrorCode::kOrderTooLarge, "cyclic order out of range");
  return cyclic_named(n, "g");
}

GroupTable amalgamate_involutions(const GroupTable& G, Elem zg, const GroupTable& H, Elem zh) {
  ElementSet zG, zH;
  zG.set(G.identity());
  zG.set(zg);
  zH.set(H.identity());
  zH.set(zh);
  return central_product(G, H, zG, zH, {{G.identity(), H.identity()}, {zg, zh}});
}

GroupTable construct_family(const FamilySpec& s) {
  validate(s);
  switch (s.family) {
    case Family::kCyclic:
      return cyclic_named(s.n, "v");
    case Family::kHomocyclic:
      return direct_product(cyclic_named(s.n, "u"), cyclic_named(s.n, "v"));
    case Family::kDihedral:
      return cyclic_by_involution(s.n - 1, -1, 0);
    case Family::kQuaternion:
      return cyclic_by_involution(s.n - 1, -1, 1LL << (s.n - 2));
    case Family::kSemidihedral:
      return cyclic_by_involution(s.n - 1, -1 + (1LL << (s.n - 2)), 0);
    case Family::kModular:
      return cyclic_by_involution(s.n - 1, 1 + (1LL << (s.n - 2)), 0);
    case Family::kWreath: {
      GroupTable B = direct_product(cyclic_named(s.n, "u"), cyclic_named(s.n, "v"));
      const std::size_t c = std::size_t(1) << s.n;
      std::vector<Elem> swap(B.order());
      for (std::size_t g = 0; g < c; ++g)
        for (std::size_t h = 0; h < c; ++h) swap[g * c + h] = Elem(h * c + g);
      return cyclic_extension(B, swap, 2, B.identity(), "t");
    }
    case Family::kMinNonabelian: {
      // <x> x <c> extended by y with y x y^-1 = x c, c central.
      GroupTable B = direct_product(cyclic_named(s.n, "x"), cyclic_named(1, "c"));
      std::vector<Elem> phi(B.order());
      for (std::size_t k = 0; k < (std::size_t(1) << s.n); ++k)
        for (std::size_t t = 0; t < 2; ++t) phi[k * 2 + t] = Elem(k * 2 + ((k + t) & 1));
      return cyclic_extension(B, phi, 1u << s.m, B.identity(), "y");
    }
    case Family::kDirectC2mxC2sq:
      return direct_product(direct_product(cyclic_named(s.m, "c"), cyclic_named(1, "u")),
                            cyclic_named(1, "w"));
    case Family::kDirectC2mxQ8:
      return direct_product(cyclic_named(s.m, "c"), cyclic_by_involution(2, -1, 2));
    case Family::kCentralC2mQ8: {
      GroupTable C = cyclic_named(s.m, "c");
      GroupTable Q = cyclic_by_involution(2, -1, 2);
      // v^2 has index 4 in Q8's normal form.
      return amalgamate_involutions(C, Elem(1u << (s.m - 1)), Q, 4);
    }
    case Family::kJanko:
      return janko(s);
  }
  throw Error(ErrorCode::kBadParameters, "unknown family");
}

std::vector<FamilySpec> family_specs_of_order(int N) {
  std::vector<FamilySpec> out;
  auto add = [&](FamilySpec s) {
    try {
      validate(s);
    } catch (const Error&) {
      return;
    }
    if (predicted_log_order(s) == N) out.push_back(s);
  };
  add({Family::kCyclic, N});
  if (N % 2 == 0) add({Family::kHomocyclic, N / 2});
  add({Family::kDihedral, N});
  add({Family::kQuaternion, N});
  add({Family::kSemidihedral, N});
  add({Family::kModular, N});
  if (N % 2 == 1) add({Family::kWreath, (N - 1) / 2});
  for (int s = 1; 2 * s + 1 <= N; ++s) add({Family::kMinNonabelian, N - 1 - s, s});
  add({Family::kDirectC2mxC2sq, 0, N - 2});
  add({Family::kDirectC2mxQ8, 0, N - 3});
  add({Family::kCentralC2mQ8, 0, N - 2});
  for (int n = 2; n + 2 <= N; ++n) {
    const int m = N - 1 - n;
    for (int i = std::max(2, n - m + 1); i <= n; ++i)
      for (int xs = 0; xs < 2; ++xs)
        for (int ap = 0; ap < 2; ++ap) add({Family::kJanko, n, m, i, xs, ap});
  }
  return out;
}

}  // namespace bicyclic
