#include "blowade/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "blowade/errors.hpp"

namespace blowade {

namespace {

using RawTerms = std::vector<std::pair<std::vector<int>, Rational>>;

class TermParser {
 public:
  TermParser(std::string_view text, std::vector<std::string> names)
      : text_(text), names_(std::move(names)) {
    order_.resize(names_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    // Longest names first so that "x10" never shadows as "x1" + "0".
    std::sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
      return names_[a].size() > names_[b].size();
    });
  }

  RawTerms parse() {
    RawTerms out;
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    out.push_back(term(sign));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
      ++pos_;
      out.push_back(term(c == '-' ? -1 : 1));
    }
    return out;
  }

 private:
  std::pair<std::vector<int>, Rational> term(int sign) {
    skip_ws();
    std::vector<int> exps(names_.size(), 0);
    Rational coeff = sign;
    bool seen = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = natural();
      skip_ws();
      Integer den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          throw SyntaxError(pos_, "expected denominator");
        }
        den = natural();
        if (den == 0) throw SyntaxError(pos_, "zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      coeff *= q;
      seen = true;
    }
    for (;;) {
      skip_ws();
      const std::size_t save = pos_;
      if (!at_end() && peek() == '*') {
        if (!seen) throw SyntaxError(pos_, "unexpected '*'");
        ++pos_;
        skip_ws();
      }
      const auto var = variable();
      if (!var) {
        if (pos_ != save) throw SyntaxError(pos_, "expected variable after '*'");
        break;
      }
      seen = true;
      skip_ws();
      long long power = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          throw SyntaxError(pos_, "expected exponent");
        }
        Integer p = natural();
        if (p > kMaxExponent) {
          throw DomainError(ErrorKind::ExponentOverflow,
                            "exponent " + p.get_str() + " exceeds " +
                                std::to_string(kMaxExponent));
        }
        power = p.get_si();
      }
      const long long total = exps[*var] + power;
      if (total > kMaxExponent) {
        throw DomainError(ErrorKind::ExponentOverflow,
                          "exponent exceeds " + std::to_string(kMaxExponent));
      }
      exps[*var] = static_cast<int>(total);
    }
    if (!seen) throw SyntaxError(pos_, "expected coefficient or variable");
    return {exps, coeff};
  }

  std::optional<std::size_t> variable() {
    for (std::size_t idx : order_) {
      const auto& n = names_[idx];
      if (text_.substr(pos_, n.size()) == n) {
        pos_ += n.size();
        return idx;
      }
    }
    return std::nullopt;
  }

  Integer natural() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::vector<std::string> names_;
  std::vector<std::size_t> order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  const auto raw = TermParser(text, {"z1", "z2", "z3", "x1", "x2", "x3"}).parse();
  Polynomial p;
  for (const auto& [e, c] : raw) {
    const bool global = e[0] || e[1] || e[2];
    const bool local = e[3] || e[4] || e[5];
    if (global && local) {
      throw DomainError(ErrorKind::Syntax, "cannot mix z and x variable names");
    }
    p.add_term({e[0] + e[3], e[1] + e[4], e[2] + e[5]}, c);
  }
  return p;
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  if (names.empty() || names.size() > 3) {
    throw DomainError(ErrorKind::InvalidArgument, "between one and three variable names");
  }
  const auto raw = TermParser(text, names).parse();
  Polynomial p;
  for (const auto& [e, c] : raw) {
    Exponent x{0, 0, 0};
    std::copy(e.begin(), e.end(), x.begin());
    p.add_term(x, c);
  }
  return p;
}

ParametricPolynomial parse_parametric(std::string_view text, std::string_view parameter) {
  const auto raw = TermParser(text, {"z1", "z2", "z3", std::string(parameter)}).parse();
  ParametricPolynomial fam;
  for (const auto& [e, c] : raw) fam[e[3]].add_term({e[0], e[1], e[2]}, c);
  std::erase_if(fam, [](const auto& kv) { return kv.second.is_zero(); });
  return fam;
}

Polynomial evaluate_parameter(const ParametricPolynomial& family, const Rational& value) {
  Polynomial r;
  for (const auto& [k, p] : family) {
    Rational scale = 1;
    for (int i = 0; i < k; ++i) scale *= value;
    r += scale * p;
  }
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw SyntaxError(0, "empty rational");
  try {
    Rational q(s);
    if (q.get_den() == 0) throw SyntaxError(0, "zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw SyntaxError(0, "malformed rational '" + s + "'");
  }
}

}  // namespace blowade
