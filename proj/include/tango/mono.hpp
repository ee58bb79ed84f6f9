// Packed monomials for up to 14 variables, exponents < 128.
//
// Layout: lo bytes 0..6 hold e0..e6, lo byte 7 is zero; hi bytes 0..6 hold
// e7..e13, hi byte 7 holds the total degree. Multiplication is word addition
// (no cross-lane carries at exponent <= 127), divisibility is a SWAR borrow
// test, and grevlex comparison is an XOR with the complement mask followed by
// unsigned comparison: the degree byte sits on top and complemented exponents
// implement the reverse-lex tie break (last variable first).
#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tango {

inline constexpr int kMaxVars = 14;

struct Mono {
  uint64_t lo = 0;
  uint64_t hi = 0;

  static constexpr uint64_t kHighs = 0x8080808080808080ull;
  static constexpr uint64_t kComplHi = 0x007f7f7f7f7f7f7full;
  static constexpr uint64_t kComplLo = 0x7f7f7f7f7f7f7f7full;

  friend bool operator==(const Mono&, const Mono&) = default;

  static Mono one() { return {}; }

  static Mono variable(int i) {
    Mono m;
    m.set(i, 1);
    return m;
  }

  static Mono from_exponents(std::span<const int> e) {
    Mono m;
    for (size_t i = 0; i < e.size(); ++i) m.set(static_cast<int>(i), e[i]);
    return m;
  }

  int exponent(int i) const {
    return int((i < 7 ? lo >> (8 * i) : hi >> (8 * (i - 7))) & 0xff);
  }

  void set(int i, int v) {
    assert(0 <= v && v < 128 && i >= 0 && i < kMaxVars);
    int old = exponent(i);
    if (i < 7)
      lo = (lo & ~(0xffull << (8 * i))) | (uint64_t(v) << (8 * i));
    else
      hi = (hi & ~(0xffull << (8 * (i - 7)))) | (uint64_t(v) << (8 * (i - 7)));
    hi = (hi & ~(0xffull << 56)) | (uint64_t(degree() + v - old) << 56);
  }

  int degree() const { return int(hi >> 56); }

  Mono operator*(const Mono& o) const {
    assert(degree() + o.degree() < 128);
    return {lo + o.lo, hi + o.hi};
  }

  // this | m ?
  bool divides(const Mono& m) const {
    return (((m.lo | kHighs) - lo) & kHighs) == kHighs &&
           (((m.hi | kHighs) - hi) & kHighs) == kHighs;
  }

  // m / this, valid only when divides(m)
  Mono quotient_into(const Mono& m) const { return {m.lo - lo, m.hi - hi}; }

  Mono lcm(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
      int a = exponent(i), b = o.exponent(i);
      r.set(i, a > b ? a : b);
    }
    return r;
  }

  bool coprime(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exponent(i) && o.exponent(i)) return false;
    return true;
  }

  int block_degree(int nblock) const {
    int d = 0;
    for (int i = 0; i < nblock; ++i) d += exponent(i);
    return d;
  }

  // grevlex with v0 > v1 > ... ; strict weak order via packed keys
  std::strong_ordering grevlex(const Mono& o) const {
    uint64_t a = hi ^ kComplHi, b = o.hi ^ kComplHi;
    if (a != b) return a <=> b;
    return (lo ^ kComplLo) <=> (o.lo ^ kComplLo);
  }
};

struct MonoHash {
  size_t operator()(const Mono& m) const {
    uint64_t x = m.lo * 0x9e3779b97f4a7c15ull ^ (m.hi + 0x517cc1b727220a95ull);
    x ^= x >> 31;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 29;
    return size_t(x);
  }
};

// All monomials of the given total degree in nvars variables, grevlex-descending.
std::vector<Mono> monomials_of_degree(int nvars, int degree);

}  // namespace tango
