#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bicyclic::gf2 {

// Dense bit vector over GF(2), packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return nbits_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVector& operator^=(const BitVector& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  bool none() const noexcept;
  std::size_t count() const noexcept;
  // Index of the lowest set bit at or after `from`; size() if none.
  std::size_t find_from(std::size_t from) const noexcept;
  // Parity of the bitwise AND.
  bool dot(const BitVector& o) const noexcept;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::string to_string() const;

  friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row space kept in echelon form: each stored row's lowest set bit is its
// pivot and no other stored row was inserted with that pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t nbits) : nbits_(nbits), pivot_row_(nbits, -1) {}

  // Clears every pivot coordinate of v. The result is the canonical
  // representative of v modulo the row space.
  BitVector reduce(BitVector v) const;
  // Returns true when v was independent (and is now part of the basis).
  bool insert(BitVector v);
  bool contains(const BitVector& v) const { return reduce(v).none(); }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t nbits() const noexcept { return nbits_; }

  // Brings rows to reduced echelon form, then returns a basis of
  // {x : r . x = 0 for all rows r}, one vector per free column in increasing order.
  std::vector<BitVector> nullspace();

 private:
  std::size_t nbits_;
  std::vector<BitVector> rows_;
  std::vector<int> pivot_row_;
  bool reduced_ = false;
};

std::vector<BitVector> nullspace(const std::vector<BitVector>& rows, std::size_t ncols);
std::size_t rank(const std::vector<BitVector>& rows, std::size_t ncols);

}  // namespace bicyclic::gf2
