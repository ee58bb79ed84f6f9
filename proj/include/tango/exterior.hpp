// GF(2) exterior algebra on e0..e5: elements are sets of square-free
// monomials encoded as bitmasks.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace tango {

class ExteriorElement {
 public:
  ExteriorElement() = default;
  explicit ExteriorElement(std::set<uint8_t> monomials) : monos_(std::move(monomials)) {}

  static ExteriorElement basis(int i) { return ExteriorElement({uint8_t(1u << i)}); }
  static ExteriorElement one() { return ExteriorElement({uint8_t(0)}); }

  bool is_zero() const { return monos_.empty(); }
  const std::set<uint8_t>& monomials() const { return monos_; }

  // homogeneous degree; -1 for zero, -2 for mixed
  int degree() const;

  ExteriorElement operator+(const ExteriorElement& o) const;
  ExteriorElement operator*(const ExteriorElement& o) const;
  bool operator==(const ExteriorElement& o) const = default;

  std::string str() const;

  // "e0e3+e1e4+e2e5" or "e0*e1*e2 + ..." or "0"
  static ExteriorElement parse(const std::string& text);
};

}  // namespace tango
