// Arithmetic in GF(p) for small primes p (p = 2 is the main case).
#pragma once

#include <cassert>
#include <cstdint>

namespace tango {

struct PrimeField {
  unsigned p = 2;

  unsigned add(unsigned a, unsigned b) const { return (a + b) % p; }
  unsigned sub(unsigned a, unsigned b) const { return (a + p - b) % p; }
  unsigned neg(unsigned a) const { return a ? p - a : 0; }
  unsigned mul(unsigned a, unsigned b) const { return (a * b) % p; }
  unsigned inv(unsigned a) const {
    assert(a % p != 0);
    // extended Euclid
    int t = 0, nt = 1, r = int(p), nr = int(a % p);
    while (nr != 0) {
      int q = r / nr;
      int tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return unsigned(t < 0 ? t + int(p) : t);
  }
  unsigned normalize(long long a) const {
    long long r = a % (long long)p;
    return unsigned(r < 0 ? r + p : r);
  }
};

}  // namespace tango
