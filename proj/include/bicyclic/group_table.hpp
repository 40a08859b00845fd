#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bicyclic {

// Element index into a GroupTable. Orders never exceed kMaxOrder, so every
// index fits; uint16_t keeps arithmetic and printing unsurprising.
using Elem = std::uint16_t;

inline constexpr std::size_t kMaxOrder = 256;

// Subsets of a group are bitsets over element indices. Cheap to hash,
// intersect and compare, which matters for subgroup-lattice work.
using ElementSet = std::bitset<kMaxOrder>;

// Immutable finite group given by its full multiplication table.
class GroupTable {
 public:
  // The trivial group.
  GroupTable();

  std::size_t order() const noexcept { return n_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const noexcept { return mult_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  unsigned elem_order(Elem a) const noexcept { return order_[a]; }

  Elem pow(Elem a, long long k) const noexcept;
  // g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv_[g]); }
  // x y x^-1 y^-1
  Elem comm(Elem x, Elem y) const noexcept { return mul(mul(x, y), mul(inv_[x], inv_[y])); }

  std::span<const Elem> row(Elem a) const noexcept {
    return {mult_.data() + std::size_t(a) * n_, n_};
  }
  // Row-major multiplication table, order()*order() entries.
  const std::vector<Elem>& data() const noexcept { return mult_; }
  // Optional human-readable element names; empty when the builder had none.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  ElementSet all() const noexcept;
  bool is_abelian() const noexcept;

  // Same order, identity and table. Labels are presentation only.
  friend bool operator==(const GroupTable& a, const GroupTable& b) noexcept {
    return a.n_ == b.n_ && a.identity_ == b.identity_ && a.mult_ == b.mult_;
  }

 private:
  friend GroupTable make_table(std::size_t, std::vector<Elem>, Elem, std::span<const Elem>,
                               std::vector<std::string>);
  friend GroupTable verify_table(const std::vector<std::vector<long long>>&);

  GroupTable(std::size_t n, std::vector<Elem> mult, Elem identity, std::vector<std::string> labels);

  std::size_t n_;
  Elem identity_;
  std::vector<Elem> mult_;
  std::vector<Elem> inv_;
  std::vector<std::uint16_t> order_;
  std::vector<std::string> labels_;
};

// Validates an arbitrary square table: shape, range, identity, Latin property
// and full associativity (every triple). Order must be a power of two and at
// most kMaxOrder.
GroupTable verify_table(const std::vector<std::vector<long long>>& raw);

// Builder path for tables that are groups by construction. Checks the Latin
// property and identity, that `gens` generates, and (xy)g = x(yg) for all x, y
// and each generator g. That last check is equivalent to full associativity:
// the elements g satisfying it are closed under products, and a closed subset
// of a finite loop containing generators is the whole loop.
// If `gens` is empty a generating set is derived from the table.
GroupTable make_table(std::size_t n, std::vector<Elem> mult, Elem identity,
                      std::span<const Elem> gens = {}, std::vector<std::string> labels = {});

// A subgroup, as a set of element indices inside a parent table. The parent
// must outlive the reference.
class SubgroupRef {
 public:
  // Throws kNotSubgroup unless `elems` is closed and contains the identity.
  SubgroupRef(const GroupTable& parent, const ElementSet& elems);
  static SubgroupRef trusted(const GroupTable& parent, const ElementSet& elems);

  const GroupTable& parent() const noexcept { return *parent_; }
  const ElementSet& mask() const noexcept { return mask_; }
  std::size_t order() const noexcept { return mask_.count(); }
  bool contains(Elem e) const noexcept { return mask_.test(e); }
  // Strictly increasing element indices.
  std::vector<Elem> elements() const;

  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) noexcept {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

 private:
  SubgroupRef(const GroupTable* parent, const ElementSet& elems) : parent_(parent), mask_(elems) {}
  const GroupTable* parent_;
  ElementSet mask_;
};

// A subgroup re-indexed as a standalone table. Local index k corresponds to the
// k-th smallest parent element.
struct Embedded {
  GroupTable table;
  std::vector<Elem> to_parent;
  std::vector<int> from_parent;  // -1 outside the subgroup
};
Embedded induced(const GroupTable& G, const ElementSet& H);
inline Embedded induced(const SubgroupRef& H) { return induced(H.parent(), H.mask()); }

struct Quotient {
  GroupTable table;
  std::vector<Elem> projection;  // parent element -> coset index
};
// Cosets are numbered by their least element, so the identity coset is 0.
// Throws kNotNormal.
Quotient quotient(const GroupTable& G, const ElementSet& N);
inline Quotient quotient(const SubgroupRef& N) { return quotient(N.parent(), N.mask()); }

// (g, h) has index g * |H| + h.
GroupTable direct_product(const GroupTable& G, const GroupTable& H);

// G x H modulo {(z, matching(z)^-1)}. `matching` lists an isomorphism zG -> zH as
// pairs covering all of zG. Throws kNotCentral / kMatchingNotIso.
GroupTable central_product(const GroupTable& G, const GroupTable& H, const ElementSet& zG,
                           const ElementSet& zH, const std::vector<std::pair<Elem, Elem>>& matching);

std::vector<Elem> to_vector(const ElementSet& s);
ElementSet to_set(std::span<const Elem> elems);

bool is_power_of_two(std::size_t n) noexcept;
int log2_exact(std::size_t n) noexcept;

}  // namespace bicyclic
