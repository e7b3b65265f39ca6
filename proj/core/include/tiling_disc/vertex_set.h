#ifndef TILING_DISC_VERTEX_SET_H_
#define TILING_DISC_VERTEX_SET_H_

#include <bit>
#include <cstdint>
#include <vector>

namespace tiling_disc {

using Vertex = int;

// Fixed-capacity bitset over the vertex indices [0, n). Words beyond n are
// kept zero so that count() and comparisons need no masking.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_(word_count(n), 0) {}

  static int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  int capacity() const { return n_; }

  bool contains(Vertex v) const {
    return (words_[v / kWordBits] >> (v % kWordBits)) & Word{1};
  }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // Lowest member, or -1 when empty.
  Vertex first() const { return next(0); }

  // Lowest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from >= n_) return -1;
    int wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + std::countr_zero(w);
      if (++wi >= static_cast<int>(words_.size())) return -1;
      w = words_[wi];
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Removes every member of o.
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  // Removes every member <= v.
  void clear_through(Vertex v) {
    const int wi = v / kWordBits;
    for (int i = 0; i < wi; ++i) words_[i] = 0;
    const int bit = v % kWordBits;
    words_[wi] &= bit == kWordBits - 1 ? Word{0} : (~Word{0} << (bit + 1));
  }

  // this = a & b, without reallocating.
  void assign_and(const VertexSet& a, const VertexSet& b) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] = a.words_[i] & b.words_[i];
    }
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::vector<Word> words_;
};

}  // namespace tiling_disc

#endif  // TILING_DISC_VERTEX_SET_H_
