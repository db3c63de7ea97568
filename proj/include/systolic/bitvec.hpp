#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace systolic {

/// Packed bit vector over GF(2).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool test(int i) const {
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i, bool value = true) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value)
      words_[static_cast<size_t>(i) >> 6] |= mask;
    else
      words_[static_cast<size_t>(i) >> 6] &= ~mask;
  }
  void flip(int i) { words_[static_cast<size_t>(i) >> 6] ^= uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other) {
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int popcount() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  /// Index of the lowest set bit, or -1 when zero.
  int lowest_set() const {
    for (size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  /// Mod-2 inner product.
  int dot(const BitVec& other) const {
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < nbits_; ++i)
      if (test(i)) s.push_back(i);
    return s;
  }

  static BitVec from_support(int nbits, const std::vector<int>& support) {
    BitVec v(nbits);
    for (int i : support) v.set(i);
    return v;
  }

  bool operator==(const BitVec& other) const {
    return nbits_ == other.nbits_ && words_ == other.words_;
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

/// Incremental row-echelon basis over GF(2); rows indexed by pivot position.
class Echelon {
 public:
  /// Reduces v against the basis; returns the residue.
  BitVec reduce(BitVec v) const {
    for (const auto& row : rows_) {
      if (v.test(row.pivot)) v ^= row.vec;
    }
    return v;
  }

  /// Reduces and inserts if independent. Returns true when v enlarged the span.
  bool insert(BitVec v) {
    v = reduce(std::move(v));
    int p = v.lowest_set();
    if (p < 0) return false;
    rows_.push_back({p, std::move(v)});
    return true;
  }

  bool contains(const BitVec& v) const { return reduce(v).none(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    int pivot;
    BitVec vec;
  };
  std::vector<Row> rows_;
};

}  // namespace systolic
