#include "tango/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tango {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  void advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos < s.size(); ++i) {
      if (s[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }
  void skip_ws() {
    for (;;) {
      while (pos < s.size() && std::isspace(unsigned(s[pos]))) advance();
      if (pos < s.size() && s[pos] == '#') {
        while (pos < s.size() && s[pos] != '\n') advance();
        continue;
      }
      break;
    }
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ScenarioError(msg, line, col);
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool try_eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool try_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      size_t end = pos + w.size();
      if (end >= s.size() || !(std::isalnum(unsigned(s[end])) || s[end] == '_')) {
        advance(w.size());
        return true;
      }
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !(std::isalpha(unsigned(s[pos])) || s[pos] == '_'))
      fail("identifier expected");
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(unsigned(s[pos])) || s[pos] == '_'))
      advance();
    return s.substr(start, pos - start);
  }
  long number() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-') advance();
    while (pos < s.size() && std::isdigit(unsigned(s[pos]))) advance();
    if (start == pos || (pos - start == 1 && s[start] == '-')) fail("number expected");
    return std::stol(s.substr(start, pos - start));
  }
  // raw text until one of the stop characters at depth 0 (parens tracked)
  std::string balanced_until(const std::string& stops) {
    skip_ws();
    size_t start = pos;
    int depth = 0;
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (depth == 0 && stops.find(c) != std::string::npos) break;
      advance();
    }
    return s.substr(start, pos - start);
  }
};

std::vector<std::string> parse_varspec(Lexer& lx) {
  std::vector<std::string> names;
  for (;;) {
    std::string n = lx.ident();
    // range form: z0..z6
    if (lx.s.compare(lx.pos, 2, "..") == 0) {
      lx.advance(2);
      std::string m = lx.ident();
      size_t i = 0;
      while (i < n.size() && !std::isdigit(unsigned(n[i]))) ++i;
      std::string prefix = n.substr(0, i);
      if (i == n.size() || m.compare(0, i, prefix) != 0)
        lx.fail("malformed variable range");
      int lo = std::stoi(n.substr(i)), hi = std::stoi(m.substr(i));
      if (hi < lo) lx.fail("empty variable range");
      for (int k = lo; k <= hi; ++k) names.push_back(prefix + std::to_string(k));
      if (!lx.try_eat(',')) break;
      continue;
    }
    names.push_back(n);
    if (!lx.try_eat(',')) break;
  }
  return names;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  Lexer lx{text};
  auto ring_of = [&](const std::string& name) -> RingPtr {
    auto it = sc.rings.find(name);
    if (it == sc.rings.end()) lx.fail("unknown ring '" + name + "'");
    return it->second;
  };
  while (!lx.done()) {
    int stmt_line = lx.line;
    if (lx.try_word("ring")) {
      std::string name = lx.ident();
      if (sc.rings.count(name)) lx.fail("duplicate ring '" + name + "'");
      lx.expect('=');
      if (!lx.try_word("GF")) lx.fail("expected GF(p)");
      lx.expect('(');
      long p = lx.number();
      if (p < 2 || p > 251) lx.fail("unsupported characteristic");
      lx.expect(')');
      lx.expect('[');
      std::vector<std::string> vars = parse_varspec(lx);
      lx.expect(']');
      RingPtr R = GradedRing::polynomial_ring(unsigned(p), vars);
      if (lx.try_eat('/')) {
        lx.expect('(');
        std::string ptext = lx.balanced_until(")");
        lx.expect(')');
        Polynomial rel;
        try {
          rel = R->parse(ptext);
        } catch (const std::exception& e) {
          lx.fail(e.what());
        }
        try {
          R = R->quotient_by(rel);
        } catch (const std::exception& e) {
          lx.fail(e.what());
        }
      }
      lx.expect(';');
      sc.rings.emplace(name, R);
    } else if (lx.try_word("matrix")) {
      std::string name = lx.ident();
      if (sc.matrices.count(name)) lx.fail("duplicate matrix '" + name + "'");
      if (!lx.try_word("over")) lx.fail("expected 'over RING'");
      RingPtr R = ring_of(lx.ident());
      if (!lx.try_word("twists")) lx.fail("expected 'twists [..]'");
      lx.expect('[');
      std::vector<int> row_deg;
      if (lx.peek() != ']')
        for (;;) {
          row_deg.push_back(int(lx.number()));
          if (!lx.try_eat(',')) break;
        }
      lx.expect(']');
      lx.expect('=');
      lx.expect('[');
      std::vector<std::vector<Polynomial>> entries;
      for (;;) {
        lx.expect('[');
        std::vector<Polynomial> row;
        for (;;) {
          int eline = lx.line, ecol = lx.col;
          std::string ptext = lx.balanced_until(",]");
          try {
            row.push_back(R->parse(ptext));
          } catch (const std::exception& e) {
            throw ScenarioError(e.what(), eline, ecol);
          }
          if (!lx.try_eat(',')) break;
        }
        lx.expect(']');
        entries.push_back(std::move(row));
        if (!lx.try_eat(',')) break;
      }
      lx.expect(']');
      lx.expect(';');
      size_t rows = entries.size();
      if (row_deg.size() != rows) lx.fail("twists length must equal the row count");
      size_t cols = entries[0].size();
      for (const auto& r : entries)
        if (r.size() != cols) lx.fail("ragged matrix rows");
      // infer column degrees; every nonzero entry must agree
      std::vector<int> col_deg(cols, 0);
      for (size_t j = 0; j < cols; ++j) {
        bool have = false;
        for (size_t i = 0; i < rows; ++i) {
          const Polynomial& e = entries[i][j];
          if (e.is_zero()) continue;
          auto d = e.homogeneous_degree();
          if (!d)
            throw ScenarioError("entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") of '" + name +
                                    "' is not homogeneous",
                                stmt_line, 1);
          int cd = *d + row_deg[i];
          if (!have) {
            col_deg[j] = cd;
            have = true;
          } else if (col_deg[j] != cd) {
            throw ScenarioError("entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") of '" + name +
                                    "' has the wrong degree",
                                stmt_line, 1);
          }
        }
        if (!have)
          throw ScenarioError("column " + std::to_string(j + 1) + " of '" + name +
                                  "' is zero; its degree cannot be inferred",
                              stmt_line, 1);
      }
      sc.matrices.emplace(name,
                          GradedMatrix::from_entries(R, row_deg, col_deg, entries));
    } else if (lx.try_word("map")) {
      std::string name = lx.ident();
      if (sc.maps.count(name)) lx.fail("duplicate map '" + name + "'");
      lx.expect(':');
      RingPtr src = ring_of(lx.ident());
      lx.expect('-');
      lx.expect('>');
      RingPtr tgt = ring_of(lx.ident());
      if (!lx.try_word("scale")) lx.fail("expected 'scale N'");
      int scale = int(lx.number());
      lx.expect('=');
      lx.expect('(');
      std::vector<Polynomial> images;
      for (;;) {
        int eline = lx.line, ecol = lx.col;
        std::string ptext = lx.balanced_until(",)");
        try {
          images.push_back(tgt->parse(ptext));
        } catch (const std::exception& e) {
          throw ScenarioError(e.what(), eline, ecol);
        }
        if (!lx.try_eat(',')) break;
      }
      lx.expect(')');
      lx.expect(';');
      RingMap m{src, tgt, images, scale};
      auto [ok, msg] = m.validate();
      if (!ok) throw ScenarioError("map '" + name + "': " + msg, stmt_line, 1);
      sc.maps.emplace(name, std::move(m));
    } else if (lx.try_word("emat")) {
      std::string name = lx.ident();
      if (sc.emats.count(name)) lx.fail("duplicate emat '" + name + "'");
      lx.expect('=');
      lx.expect('[');
      ExteriorMatrix em;
      for (;;) {
        lx.expect('[');
        std::vector<ExteriorElement> row;
        for (;;) {
          int eline = lx.line, ecol = lx.col;
          std::string etext = lx.balanced_until(",]");
          try {
            row.push_back(ExteriorElement::parse(etext));
          } catch (const std::exception& e) {
            throw ScenarioError(e.what(), eline, ecol);
          }
          if (!lx.try_eat(',')) break;
        }
        lx.expect(']');
        if (!em.entries.empty() && row.size() != em.entries[0].size())
          lx.fail("ragged emat rows");
        em.entries.push_back(std::move(row));
        if (!lx.try_eat(',')) break;
      }
      lx.expect(']');
      lx.expect(';');
      sc.emats.emplace(name, std::move(em));
    } else if (lx.try_word("job")) {
      Scenario::Job job;
      job.line = stmt_line;
      job.kind = lx.ident();
      while (lx.peek() != ';' && lx.peek() != '\0') {
        lx.skip_ws();
        size_t start = lx.pos;
        while (lx.pos < lx.s.size() && !std::isspace(unsigned(lx.s[lx.pos])) &&
               lx.s[lx.pos] != ';')
          lx.advance();
        job.args.push_back(lx.s.substr(start, lx.pos - start));
      }
      lx.expect(';');
      sc.jobs.push_back(std::move(job));
    } else {
      lx.fail("expected one of: ring, matrix, map, emat, job");
    }
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

uint64_t matrix_digest(const GradedMatrix& m) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (char c : s) {
      h ^= uint64_t(uint8_t(c));
      h *= 1099511628211ull;
    }
  };
  mix(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) mix("|" + m.entry(i, j).str());
  return h;
}

}  // namespace tango
