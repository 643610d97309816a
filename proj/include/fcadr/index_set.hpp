#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace fcadr {

/// Subset of a fixed, ordered universe {0, ..., universe-1}, stored as a
/// packed bit vector. Two words are kept inline, so contexts with up to 128
/// objects or attributes never touch the heap for set algebra.
///
/// The tag parameter keeps object sets and attribute sets from being mixed
/// up at compile time; operands of a binary operation must share a universe.
template <class Tag>
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_(word_count(universe), Word{0}) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  static IndexSet of(std::size_t universe, std::initializer_list<std::size_t> members) {
    IndexSet s(universe);
    for (auto m : members) s.insert(m);
    return s;
  }

  template <class Range>
  static IndexSet from_indices(std::size_t universe, const Range& members) {
    IndexSet s(universe);
    for (auto m : members) s.insert(static_cast<std::size_t>(m));
    return s;
  }

  std::size_t universe() const { return universe_; }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_full() const { return count() == universe_; }

  bool contains(std::size_t i) const {
    assert(i < universe_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1};
  }

  void insert(std::size_t i) {
    assert(i < universe_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }

  void erase(std::size_t i) {
    assert(i < universe_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }

  IndexSet with(std::size_t i) const {
    IndexSet s = *this;
    s.insert(i);
    return s;
  }

  IndexSet& operator&=(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  /// Symmetric difference.
  friend IndexSet operator^(IndexSet a, const IndexSet& b) {
    assert(a.universe_ == b.universe_);
    for (std::size_t k = 0; k < a.words_.size(); ++k) a.words_[k] ^= b.words_[k];
    return a;
  }

  IndexSet complement() const {
    IndexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  bool is_subset_of(const IndexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool is_proper_subset_of(const IndexSet& o) const { return is_subset_of(o) && *this != o; }

  bool intersects(const IndexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  /// True iff both sets contain the same members among {0, ..., bound-1}.
  bool agrees_below(const IndexSet& o, std::size_t bound) const {
    assert(universe_ == o.universe_);
    std::size_t full_words = bound / kWordBits;
    for (std::size_t k = 0; k < full_words; ++k)
      if (words_[k] != o.words_[k]) return false;
    std::size_t rest = bound % kWordBits;
    if (rest == 0) return true;
    Word mask = (Word{1} << rest) - 1;
    return ((words_[full_words] ^ o.words_[full_words]) & mask) == 0;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        fn(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::span<const Word> words() const { return {words_.data(), words_.size()}; }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  static std::size_t word_count(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }

  void trim() {
    std::size_t rest = universe_ % kWordBits;
    if (rest != 0 && !words_.empty()) words_.back() &= (Word{1} << rest) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

/// Canonical order used for every sorted output: smaller sets first, and
/// among sets of equal size, lexicographic order of the ascending member
/// lists (so {1,3,5} < {2,3,4}).
template <class Tag>
bool canonical_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
  assert(a.universe() == b.universe());
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto wa = a.words(), wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k) {
    auto diff = wa[k] ^ wb[k];
    if (diff) return (wa[k] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

struct IndexSetHash {
  template <class Tag>
  std::size_t operator()(const IndexSet<Tag>& s) const {
    return s.hash();
  }
};

}  // namespace fcadr
