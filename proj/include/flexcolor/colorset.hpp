// Small fixed-capacity color set used throughout the solvers.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace flexcolor {

// Set of colors over a dense range [0, 128), stored as two 64-bit words.
// Colors are dense nonnegative integers; instance loaders remap arbitrary
// labels into this range.
class ColorSet {
 public:
  static constexpr int kMaxColors = 128;

  constexpr ColorSet() = default;

  static ColorSet single(int c) {
    ColorSet s;
    s.set(c);
    return s;
  }

  // {0, 1, ..., n-1}
  static ColorSet first_n(int n) {
    ColorSet s;
    for (int c = 0; c < n; ++c) s.set(c);
    return s;
  }

  static ColorSet from_vector(const std::vector<int>& v) {
    ColorSet s;
    for (int c : v) s.set(c);
    return s;
  }

  bool test(int c) const { return (word(c) >> bit(c)) & 1u; }

  void set(int c) { w_[c >> 6] |= (std::uint64_t{1} << (c & 63)); }

  void reset(int c) { w_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

  int count() const {
    return __builtin_popcountll(w_[0]) + __builtin_popcountll(w_[1]);
  }

  bool empty() const { return w_[0] == 0 && w_[1] == 0; }

  // Smallest element, or -1 when empty.
  int lowest() const {
    if (w_[0]) return __builtin_ctzll(w_[0]);
    if (w_[1]) return 64 + __builtin_ctzll(w_[1]);
    return -1;
  }

  // Largest element, or -1 when empty.
  int highest() const {
    if (w_[1]) return 127 - __builtin_clzll(w_[1]);
    if (w_[0]) return 63 - __builtin_clzll(w_[0]);
    return -1;
  }

  // Smallest element strictly greater than c, or -1.
  int next_after(int c) const {
    ColorSet above = *this & mask_above(c);
    return above.lowest();
  }

  bool is_subset_of(const ColorSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  ColorSet operator|(const ColorSet& o) const {
    ColorSet r;
    r.w_[0] = w_[0] | o.w_[0];
    r.w_[1] = w_[1] | o.w_[1];
    return r;
  }

  ColorSet operator&(const ColorSet& o) const {
    ColorSet r;
    r.w_[0] = w_[0] & o.w_[0];
    r.w_[1] = w_[1] & o.w_[1];
    return r;
  }

  ColorSet minus(const ColorSet& o) const {
    ColorSet r;
    r.w_[0] = w_[0] & ~o.w_[0];
    r.w_[1] = w_[1] & ~o.w_[1];
    return r;
  }

  ColorSet& operator|=(const ColorSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }

  bool operator==(const ColorSet& o) const {
    return w_[0] == o.w_[0] && w_[1] == o.w_[1];
  }
  bool operator!=(const ColorSet& o) const { return !(*this == o); }

  // Elements strictly above c.
  static ColorSet mask_above(int c) {
    ColorSet r;
    int lo = c + 1;
    if (lo >= kMaxColors) return r;
    if (lo < 64) {
      r.w_[0] = ~std::uint64_t{0} << lo;
      r.w_[1] = ~std::uint64_t{0};
    } else {
      r.w_[0] = 0;
      r.w_[1] = ~std::uint64_t{0} << (lo - 64);
    }
    return r;
  }

  // Lexicographic comparison of the ascending element sequences,
  // e.g. {0,2} < {1}, {0} < {0,2}.  Returns <0, 0, >0.
  static int cmp_lex(const ColorSet& a, const ColorSet& b) {
    ColorSet diff;
    diff.w_[0] = a.w_[0] ^ b.w_[0];
    diff.w_[1] = a.w_[1] ^ b.w_[1];
    if (diff.empty()) return 0;
    int low = diff.lowest();
    if (a.test(low)) {
      // a has the smaller element at the first difference; b either has a
      // larger element there (a < b) or ends (b is a proper prefix, b < a).
      return (b & mask_above(low)).empty() ? 1 : -1;
    }
    return (a & mask_above(low)).empty() ? -1 : 1;
  }

  bool lex_less(const ColorSet& o) const { return cmp_lex(*this, o) < 0; }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (int c = lowest(); c != -1; c = next_after(c)) v.push_back(c);
    return v;
  }

  std::uint64_t hash() const {
    std::uint64_t h = w_[0] * 0x9E3779B97F4A7C15ull;
    h ^= w_[1] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int c : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(c);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t word(int c) const { return w_[c >> 6]; }
  static int bit(int c) { return c & 63; }

  std::uint64_t w_[2] = {0, 0};
};

struct ColorSetHash {
  std::size_t operator()(const ColorSet& s) const {
    return static_cast<std::size_t>(s.hash());
  }
};

}  // namespace flexcolor
