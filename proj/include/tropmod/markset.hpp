#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tropmod {

// A set of markings in {1..31} packed into one word. Index sets of boundary
// divisors live in {2..n}; marking 1 only ever appears in full-marking sets.
class MarkSet {
 public:
  constexpr MarkSet() : bits_(0) {}
  constexpr explicit MarkSet(uint32_t bits) : bits_(bits) {}
  MarkSet(std::initializer_list<int> xs) : bits_(0) {
    for (int x : xs) bits_ |= bit(x);
  }

  static constexpr MarkSet range(int lo, int hi) {  // inclusive {lo..hi}
    uint32_t b = 0;
    for (int i = lo; i <= hi; ++i) b |= bit(i);
    return MarkSet(b);
  }
  static constexpr MarkSet pair(int i, int j) { return MarkSet(bit(i) | bit(j)); }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ & bit(i)) != 0; }
  int size() const { return __builtin_popcount(bits_); }
  int min() const { return __builtin_ctz(bits_); }
  int max() const { return 31 - __builtin_clz(bits_); }

  constexpr MarkSet with(int i) const { return MarkSet(bits_ | bit(i)); }
  constexpr MarkSet without(int i) const { return MarkSet(bits_ & ~bit(i)); }
  constexpr MarkSet unite(MarkSet o) const { return MarkSet(bits_ | o.bits_); }
  constexpr MarkSet intersect(MarkSet o) const { return MarkSet(bits_ & o.bits_); }
  constexpr MarkSet setminus(MarkSet o) const { return MarkSet(bits_ & ~o.bits_); }

  constexpr bool subset_of(MarkSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint_from(MarkSet o) const { return (bits_ & o.bits_) == 0; }
  constexpr bool nested_or_disjoint(MarkSet o) const {
    return subset_of(o) || o.subset_of(*this) || disjoint_from(o);
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (uint32_t b = bits_; b;) {
      int i = __builtin_ctz(b);
      out.push_back(i);
      b &= b - 1;
    }
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(MarkSet a, MarkSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(MarkSet a, MarkSet b) { return a.bits_ != b.bits_; }

 private:
  static constexpr uint32_t bit(int i) { return 1u << i; }
  uint32_t bits_;
};

// Lexicographic order on the sorted element sequences, e.g. {2,3} < {2,4} < {3}.
inline bool lex_less(MarkSet a, MarkSet b) {
  if (a == b) return false;
  uint32_t diff = a.bits() ^ b.bits();
  int i = __builtin_ctz(diff);  // smallest element held by exactly one side
  if (a.contains(i)) {
    // b either continues with a larger element (a wins) or b is a strict prefix.
    return (b.bits() >> i) != 0;
  }
  return (a.bits() >> i) == 0;
}

// Divisor enumeration order: by cardinality, then lexicographic.
inline bool size_lex_less(MarkSet a, MarkSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace tropmod
