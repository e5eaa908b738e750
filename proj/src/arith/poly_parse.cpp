#include "cryslat/arith/poly_parse.hpp"

#include <cctype>
#include <stdexcept>

namespace cryslat {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  /// Parses a sum of terms up to '=' or the end; `sign` multiplies every term.
  void sum(IntPoly& out, int sign) {
    skip();
    bool first = true;
    while (pos_ < s_.size() && s_[pos_] != '=') {
      int t = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') t = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      term(out, sign * t);
      first = false;
      skip();
    }
    if (first) fail("empty expression");
  }

  bool at_equals() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '=') {
      ++pos_;
      return true;
    }
    return false;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_polynomial: " + why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Int number() {
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Int(s_.substr(start, pos_ - start));
  }

  std::optional<size_t> variable() {
    // longest matching name
    std::optional<size_t> best;
    size_t len = 0;
    for (size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.size() > len && s_.compare(pos_, v.size(), v) == 0) {
        best = i;
        len = v.size();
      }
    }
    if (best) pos_ += len;
    return best;
  }

  void term(IntPoly& out, int sign) {
    Int c = 1;
    bool any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      c = number();
      any = true;
    }
    Exponent e(vars_.size(), 0);
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
      }
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        c *= number();
        any = true;
        continue;
      }
      const auto v = variable();
      if (!v) break;
      any = true;
      skip();
      int ex = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        ex = static_cast<int>(number().get_si());
      }
      e[*v] += ex;
    }
    if (!any) fail("expected a term");
    out.add_term(e, sign < 0 ? Int(-c) : c);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

IntPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars, std::optional<std::vector<int>> weights) {
  for (const auto& v : vars)
    if (v.empty() || std::isdigit(static_cast<unsigned char>(v[0])))
      throw std::invalid_argument("parse_polynomial: invalid variable name '" + v + "'");
  IntPoly out(vars, std::move(weights));
  Parser ps(text, vars);
  ps.sum(out, 1);
  if (ps.at_equals()) ps.sum(out, -1);
  if (!ps.done()) ps.fail("unexpected trailing input");
  return out;
}

}  // namespace cryslat
