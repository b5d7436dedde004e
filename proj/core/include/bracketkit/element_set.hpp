#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bracketkit {

/// Dense subset of the ground set {0, ..., universe-1}, stored as 64-bit words.
/// Bits above `universe` are always zero.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  static ElementSet full(std::size_t universe);
  /// Throws InputError if an index is outside the universe.
  static ElementSet from_indices(std::size_t universe, std::span<const std::size_t> indices);
  static ElementSet from_indices(std::size_t universe, std::initializer_list<std::size_t> indices);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;

  bool test(std::size_t i) const {
    assert(i < universe_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator^=(const ElementSet& other);
  /// this \ other
  ElementSet& subtract(const ElementSet& other);
  ElementSet complement() const;

  std::vector<std::size_t> indices() const;

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

ElementSet operator&(ElementSet a, const ElementSet& b);
ElementSet operator|(ElementSet a, const ElementSet& b);
ElementSet operator^(ElementSet a, const ElementSet& b);
/// a \ b
ElementSet difference(ElementSet a, const ElementSet& b);

/// |A Δ B|
std::size_t sym_diff_size(const ElementSet& a, const ElementSet& b);
std::size_t intersection_size(const ElementSet& a, const ElementSet& b);
/// |A \ B|
std::size_t difference_size(const ElementSet& a, const ElementSet& b);

/// Lexicographic order of the sorted element lists.
bool lex_less(const ElementSet& a, const ElementSet& b);
/// Canonical range order: decreasing cardinality, then lex_less.
bool canonical_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

}  // namespace bracketkit
