#include "bracketkit/element_set.hpp"

#include <bit>
#include <string>

#include "bracketkit/errors.hpp"

namespace bracketkit {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe & 63; tail != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

ElementSet ElementSet::from_indices(std::size_t universe, std::span<const std::size_t> indices) {
  ElementSet s(universe);
  for (std::size_t i : indices) {
    if (i >= universe)
      throw InputError("element index " + std::to_string(i) + " outside ground set of size " +
                       std::to_string(universe));
    s.set(i);
  }
  return s;
}

ElementSet ElementSet::from_indices(std::size_t universe, std::initializer_list<std::size_t> indices) {
  return from_indices(universe, std::span<const std::size_t>(indices.begin(), indices.size()));
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator^=(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

ElementSet& ElementSet::subtract(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet out = full(universe_);
  out.subtract(*this);
  return out;
}

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }
ElementSet difference(ElementSet a, const ElementSet& b) { return a.subtract(b); }

std::size_t sym_diff_size(const ElementSet& a, const ElementSet& b) {
  assert(a.universe() == b.universe());
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return c;
}

std::size_t intersection_size(const ElementSet& a, const ElementSet& b) {
  assert(a.universe() == b.universe());
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  return c;
}

std::size_t difference_size(const ElementSet& a, const ElementSet& b) {
  assert(a.universe() == b.universe());
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & ~wb[i]));
  return c;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  assert(a.universe() == b.universe());
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (diff == 0) continue;
    const std::uint64_t lowest = diff & (~diff + 1);
    const bool in_a = (wa[i] & lowest) != 0;
    // The set holding the smallest differing element m is smaller, unless the
    // other set has nothing above m (then the other is a proper prefix).
    const ElementSet& other = in_a ? b : a;
    const auto wo = other.words();
    bool other_has_more = (wo[i] & ~((lowest << 1) - 1)) != 0;
    for (std::size_t j = i + 1; !other_has_more && j < wo.size(); ++j) other_has_more = wo[j] != 0;
    return in_a ? other_has_more : !other_has_more;
  }
  return false;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca > cb;
  return lex_less(a, b);
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.universe();
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

}  // namespace bracketkit
