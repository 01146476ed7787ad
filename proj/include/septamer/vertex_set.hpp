#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace septamer {

/// A set of vertex indices backed by a dynamic bitset.
///
/// The word vector is kept trimmed (no trailing zero words), so two sets are
/// equal iff their word vectors are equal, regardless of how many vertices
/// the graphs they came from had.  operator< orders sets the same way their
/// sorted element lists would compare lexicographically, which is the order
/// enumeration results are emitted in.
class VertexSet {
 public:
  VertexSet() = default;

  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  /// The full set {0, 1, ..., n-1}.
  static VertexSet universe(int n) {
    if (n < 0) throw std::invalid_argument("universe: negative size");
    VertexSet s;
    if (n == 0) return s;
    s.w_.assign(static_cast<std::size_t>((n + 63) / 64), ~std::uint64_t{0});
    int spare = n % 64;
    if (spare != 0) s.w_.back() >>= (64 - spare);
    return s;
  }

  bool contains(int v) const {
    if (v < 0) return false;
    std::size_t i = static_cast<std::size_t>(v) / 64;
    return i < w_.size() && (w_[i] >> (v % 64) & 1u) != 0;
  }

  void insert(int v) {
    if (v < 0) throw std::invalid_argument("VertexSet::insert: negative vertex");
    std::size_t i = static_cast<std::size_t>(v) / 64;
    if (i >= w_.size()) w_.resize(i + 1, 0);
    w_[i] |= std::uint64_t{1} << (v % 64);
  }

  void erase(int v) {
    if (v < 0) return;
    std::size_t i = static_cast<std::size_t>(v) / 64;
    if (i < w_.size()) {
      w_[i] &= ~(std::uint64_t{1} << (v % 64));
      trim();
    }
  }

  int size() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const { return w_.empty(); }

  void clear() { w_.clear(); }

  /// Smallest element, or -1 if empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  /// Largest element, or -1 if empty.
  int last() const {
    if (w_.empty()) return -1;
    std::size_t i = w_.size() - 1;  // trimmed: last word is nonzero
    return static_cast<int>(i * 64 + 63 - std::countl_zero(w_[i]));
  }

  bool operator==(const VertexSet& o) const { return w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return w_ != o.w_; }

  /// Lexicographic order on the sorted element lists.  The set whose first
  /// differing vertex is present sorts first when it is the smaller vertex;
  /// equivalently, find the lowest set bit of the symmetric difference: the
  /// set containing it compares less if that bit is below the other set's
  /// remaining elements — which reduces to the rule implemented here.
  bool operator<(const VertexSet& o) const {
    std::size_t n = std::max(w_.size(), o.w_.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t a = i < w_.size() ? w_[i] : 0;
      std::uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
      if (a == b) continue;
      std::uint64_t d = a ^ b;
      std::uint64_t low = d & (~d + 1);
      // The set that contains the lowest differing vertex has the smaller
      // element at the first position where the sorted lists disagree…
      // unless the other set has nothing left at all (it is a strict prefix),
      // in which case the shorter (prefix) set comes first.
      bool in_a = (a & low) != 0;
      if (in_a) {
        // b has no element >= low in this word and none in later words?
        if ((b & ~(low - 1)) != 0) return true;
        for (std::size_t j = i + 1; j < o.w_.size(); ++j)
          if (o.w_[j] != 0) return true;
        return false;  // b is a strict prefix of a
      } else {
        if ((a & ~(low - 1)) != 0) return false;
        for (std::size_t j = i + 1; j < w_.size(); ++j)
          if (w_[j] != 0) return false;
        return true;  // a is a strict prefix of b
      }
    }
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    if (w_.size() > o.w_.size()) w_.resize(o.w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    trim();
    return *this;
  }

  /// Set difference (elements of *this not in o).
  VertexSet& operator-=(const VertexSet& o) {
    std::size_t n = std::min(w_.size(), o.w_.size());
    for (std::size_t i = 0; i < n; ++i) w_[i] &= ~o.w_[i];
    trim();
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    std::size_t n = std::min(w_.size(), o.w_.size());
    for (std::size_t i = 0; i < n; ++i)
      if ((w_[i] & o.w_[i]) != 0) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
      if ((w_[i] & ~b) != 0) return false;
    }
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int v : *this) {
      if (sep) s += ",";
      s += std::to_string(v);
      sep = true;
    }
    return s + "}";
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : w_) {
      h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  /// Iterates set elements in ascending order.
  class iterator {
   public:
    using value_type = int;
    iterator(const std::vector<std::uint64_t>* w, std::size_t i, std::uint64_t cur)
        : w_(w), i_(i), cur_(cur) {
      advance();
    }
    int operator*() const {
      return static_cast<int>(i_ * 64 + std::countr_zero(cur_));
    }
    iterator& operator++() {
      cur_ &= cur_ - 1;
      advance();
      return *this;
    }
    bool operator!=(const iterator& o) const { return i_ != o.i_ || cur_ != o.cur_; }
   private:
    void advance() {
      while (cur_ == 0 && i_ + 1 < w_->size()) cur_ = (*w_)[++i_];
      if (cur_ == 0 && i_ + 1 == w_->size()) ++i_;  // normalize end state
    }
    const std::vector<std::uint64_t>* w_;
    std::size_t i_;
    std::uint64_t cur_;
  };

  iterator begin() const {
    if (w_.empty()) return end();
    return iterator(&w_, 0, w_[0]);
  }
  iterator end() const { return iterator(&w_, w_.size(), 0); }

 private:
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }

  std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace septamer
