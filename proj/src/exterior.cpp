#include "tango/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace tango {

int ExteriorElement::degree() const {
  if (monos_.empty()) return -1;
  int d = std::popcount(unsigned(*monos_.begin()));
  for (uint8_t m : monos_)
    if (std::popcount(unsigned(m)) != d) return -2;
  return d;
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
  std::set<uint8_t> r = monos_;
  for (uint8_t m : o.monos_) {
    auto [it, inserted] = r.insert(m);
    if (!inserted) r.erase(it);
  }
  return ExteriorElement(std::move(r));
}

ExteriorElement ExteriorElement::operator*(const ExteriorElement& o) const {
  std::set<uint8_t> r;
  for (uint8_t a : monos_)
    for (uint8_t b : o.monos_) {
      if (a & b) continue;  // e_i^2 = 0
      uint8_t m = uint8_t(a | b);
      auto [it, inserted] = r.insert(m);
      if (!inserted) r.erase(it);  // char 2, signs immaterial
    }
  return ExteriorElement(std::move(r));
}

std::string ExteriorElement::str() const {
  if (monos_.empty()) return "0";
  std::string s;
  for (uint8_t m : monos_) {
    if (!s.empty()) s += "+";
    if (!m) s += "1";
    for (int i = 0; i < 6; ++i)
      if (m >> i & 1) s += "e" + std::to_string(i);
  }
  return s;
}

ExteriorElement ExteriorElement::parse(const std::string& text) {
  ExteriorElement acc;
  size_t pos = 0, n = text.size();
  auto skip = [&] {
    while (pos < n && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  bool any_term = false;
  for (;;) {
    skip();
    if (pos >= n) break;
    // one term: product of factors 'e<i>', '1' or '0', '*' optional
    uint8_t mask = 0;
    bool dead = false, got = false;
    for (;;) {
      skip();
      if (pos >= n || text[pos] == '+') break;
      char c = text[pos];
      if (c == '*') {
        ++pos;
        continue;
      }
      if (c == 'e') {
        ++pos;
        if (pos >= n || text[pos] < '0' || text[pos] > '5')
          throw std::runtime_error("exterior parse: expected index 0..5 after 'e'");
        int idx = text[pos] - '0';
        if (mask >> idx & 1) dead = true;  // repeated factor kills the term
        mask |= uint8_t(1u << idx);
        got = true;
        ++pos;
      } else if (c == '1') {
        got = true;
        ++pos;
      } else if (c == '0') {
        dead = true;
        got = true;
        ++pos;
      } else {
        throw std::runtime_error(std::string("exterior parse: unexpected '") + c + "'");
      }
    }
    if (!got) throw std::runtime_error("exterior parse: empty term");
    any_term = true;
    if (!dead) acc = acc + ExteriorElement({mask});
    skip();
    if (pos >= n) break;
    if (text[pos] == '+') ++pos;
  }
  if (!any_term) throw std::runtime_error("exterior parse: empty input");
  return acc;
}

}  // namespace tango
