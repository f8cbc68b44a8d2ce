#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

// Calls f(v) for every set bit of a word row, ascending.
template <class F>
void for_each_bit(std::span<const Word> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word bits = row[w];
    while (bits) {
      const auto b = static_cast<std::size_t>(std::countr_zero(bits));
      f(static_cast<Vertex>(w * kWordBits + b));
      bits &= bits - 1;
    }
  }
}

inline std::size_t popcount(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// A subset of {0, ..., universe-1} stored as a bit row.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~Word{0};
    s.trim();
    return s;
  }

  // Takes ownership of a raw row; bits at or above `universe` are cleared.
  static VertexSet from_words(std::size_t universe, std::span<const Word> row) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size() && w < row.size(); ++w) s.words_[w] = row[w];
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
  }
  void insert(Vertex v) {
    detail::require(v < universe_, "VertexSet::insert: vertex outside universe");
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    if (v < universe_) words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  std::size_t size() const { return popcount(words_); }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or universe() when empty.
  Vertex first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<Vertex>(w * kWordBits + std::countr_zero(words_[w]));
    return static_cast<Vertex>(universe_);
  }

  template <class F>
  void for_each(F&& f) const {
    for_each_bit(words_, f);
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    check_same(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  VertexSet& intersect_row(std::span<const Word> row) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= row[w];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }
  void check_same(const VertexSet& o) const {
    detail::require(o.universe_ == universe_, "VertexSet: universe mismatch");
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace ramsey
