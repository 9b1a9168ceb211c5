#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

namespace kfam {

/// A subset of the ground set [n], n <= 128, packed into two machine words.
///
/// Element e (1-based) is bit e-1. The numeric order on masks (high word
/// first) is the total order every Family is sorted by; it ranks sets by
/// their largest elements first.
class ElementSet {
 public:
  static constexpr int kMaxElement = 128;

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> elements);

  /// The interval [lo, hi]; empty when hi < lo.
  static ElementSet range(int lo, int hi);
  static constexpr ElementSet from_words(std::uint64_t lo, std::uint64_t hi) {
    ElementSet s;
    s.w_ = {lo, hi};
    return s;
  }
  template <class Range>
  static ElementSet from(const Range& elements) {
    ElementSet s;
    for (int e : elements) s.insert(e);
    return s;
  }

  bool contains(int e) const {
    if (e < 1 || e > kMaxElement) return false;
    const int b = e - 1;
    return (w_[b >> 6] >> (b & 63)) & 1U;
  }
  void insert(int e);
  void erase(int e);

  int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool empty() const { return (w_[0] | w_[1]) == 0; }

  /// Smallest / largest element, 0 for the empty set.
  int min_element() const;
  int max_element() const;

  std::vector<int> elements() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = w_[w];
      while (bits) {
        fn(w * 64 + std::countr_zero(bits) + 1);
        bits &= bits - 1;
      }
    }
  }

  bool intersects(const ElementSet& o) const {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
  }
  bool is_subset_of(const ElementSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  std::uint64_t word(int i) const { return w_[i]; }

  ElementSet& operator&=(const ElementSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }
  ElementSet& operator^=(const ElementSet& o) {
    w_[0] ^= o.w_[0];
    w_[1] ^= o.w_[1];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.w_[1] <=> b.w_[1]; c != 0) return c;
    return a.w_[0] <=> b.w_[0];
  }

  /// "{1,2,5}"
  std::string to_string() const;

  std::size_t hash() const {
    std::uint64_t h = w_[0] * 0x9E3779B97F4A7C15ULL;
    h ^= w_[1] + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, 2> w_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Lexicographic comparison of the ascending element lists ("size-then-lex"
/// callers compare sizes first themselves).
bool lex_less(const ElementSet& a, const ElementSet& b);

/// Calls fn(subset) for every r-subset of `universe`, in lexicographic order of
/// the ascending element lists. Stops early if fn returns false.
template <class Fn>
void for_each_subset_of_size(const ElementSet& universe, int r, Fn&& fn) {
  const std::vector<int> pool = universe.elements();
  const int m = static_cast<int>(pool.size());
  if (r < 0 || r > m) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    ElementSet s;
    for (int i : idx) s.insert(pool[i]);
    if constexpr (std::is_same_v<decltype(fn(s)), bool>) {
      if (!fn(s)) return;
    } else {
      fn(s);
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls fn(subset) for every subset of `s` (including the empty set and s).
template <class Fn>
void for_each_subset(const ElementSet& s, Fn&& fn) {
  const std::vector<int> elems = s.elements();
  const std::size_t count = std::size_t{1} << elems.size();
  for (std::size_t bits = 0; bits < count; ++bits) {
    ElementSet sub;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (bits >> i & 1U) sub.insert(elems[i]);
    fn(sub);
  }
}

}  // namespace kfam
