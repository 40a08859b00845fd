#include "bicyclic/gf2.hpp"

#include <bit>

namespace bicyclic::gf2 {

bool BitVector::none() const noexcept {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t BitVector::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += std::size_t(std::popcount(w));
  return c;
}

std::size_t BitVector::find_from(std::size_t from) const noexcept {
  if (from >= nbits_) return nbits_;
  std::size_t k = from >> 6;
  std::uint64_t w = words_[k] & (~std::uint64_t(0) << (from & 63));
  while (true) {
    if (w) {
      std::size_t i = (k << 6) + std::size_t(std::countr_zero(w));
      return i < nbits_ ? i : nbits_;
    }
    if (++k == words_.size()) return nbits_;
    w = words_[k];
  }
}

bool BitVector::dot(const BitVector& o) const noexcept {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
  return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

BitVector EchelonBasis::reduce(BitVector v) const {
  for (std::size_t p = v.find_from(0); p < nbits_; p = v.find_from(p + 1)) {
    if (pivot_row_[p] >= 0) v ^= rows_[pivot_row_[p]];
  }
  return v;
}

bool EchelonBasis::insert(BitVector v) {
  v = reduce(std::move(v));
  const std::size_t p = v.find_from(0);
  if (p >= nbits_) return false;
  pivot_row_[p] = int(rows_.size());
  rows_.push_back(std::move(v));
  reduced_ = false;
  return true;
}

std::vector<BitVector> EchelonBasis::nullspace() {
  if (!reduced_) {
    // Descending pivots: by the time pivot p is used, its row is already clear
    // of every larger pivot, so back-substitution never reintroduces one.
    for (std::size_t p = nbits_; p-- > 0;) {
      const int rp = pivot_row_[p];
      if (rp < 0) continue;
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (int(r) != rp && rows_[r].test(p)) rows_[r] ^= rows_[rp];
    }
    reduced_ = true;
  }
  std::vector<BitVector> basis;
  for (std::size_t c = 0; c < nbits_; ++c) {
    if (pivot_row_[c] >= 0) continue;
    BitVector x(nbits_);
    x.set(c);
    for (std::size_t p = 0; p < nbits_; ++p) {
      const int rp = pivot_row_[p];
      if (rp >= 0 && rows_[rp].test(c)) x.set(p);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<BitVector> nullspace(const std::vector<BitVector>& rows, std::size_t ncols) {
  EchelonBasis e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.nullspace();
}

std::size_t rank(const std::vector<BitVector>& rows, std::size_t ncols) {
  EchelonBasis e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace bicyclic::gf2
