#include "arithmetree/linear.hpp"

#include <algorithm>
#include <vector>

#include "arithmetree/errors.hpp"

namespace atree {

std::string rational_str(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::string literal(const Name& v) { return v.is_unit() ? "1" : decode_name(v).str(); }

std::string join_terms(const std::vector<std::pair<Rational, std::string>>& ts) {
  if (ts.empty()) return "0";
  std::string s;
  for (const auto& [c, b] : ts) {
    Rational a = c;
    if (s.empty()) {
      if (a.numerator() < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a.numerator() < 0 ? " - " : " + ";
      if (a.numerator() < 0) a = -a;
    }
    if (a != Rational(1)) s += rational_str(a) + "*";
    s += b;
  }
  return s;
}

}  // namespace

bool lit_less(const Name& a, const Name& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return name_literal_less(a, b);
}

std::string to_text(const LinComb& x) {
  std::vector<std::pair<Name, Rational>> ks(x.terms().begin(), x.terms().end());
  std::sort(ks.begin(), ks.end(), [](const auto& a, const auto& b) { return lit_less(a.first, b.first); });
  std::vector<std::pair<Rational, std::string>> ts;
  for (const auto& [k, c] : ks) ts.emplace_back(c, literal(k));
  return join_terms(ts);
}

std::string to_text(const TensorComb& x) {
  using Term = std::pair<std::pair<Name, Name>, Rational>;
  std::vector<Term> ks(x.terms().begin(), x.terms().end());
  std::sort(ks.begin(), ks.end(), [](const Term& a, const Term& b) {
    const auto& [l1, r1] = a.first;
    const auto& [l2, r2] = b.first;
    if (l1 != l2) return lit_less(l2, l1);  // larger left factor first: v (x) 1 leads
    return lit_less(r1, r2);
  });
  std::vector<std::pair<Rational, std::string>> ts;
  for (const auto& [k, c] : ks) ts.emplace_back(c, literal(k.first) + " (x) " + literal(k.second));
  return join_terms(ts);
}

LinComb parse_lincomb(std::string_view text) {
  LinComb out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) {
      if (first) throw SyntaxError("empty sum", i);
      break;
    }
    long long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw SyntaxError("expected + or -", i);
    }
    Rational c = sign;
    // optional "p*" or "p/q*"
    const std::size_t star = text.find('*', i);
    const std::size_t paren = text.find('(', i);
    if (star != std::string_view::npos && (paren == std::string_view::npos || star < paren)) {
      std::string num(text.substr(i, star - i));
      try {
        const auto slash = num.find('/');
        c *= slash == std::string::npos
                 ? Rational(std::stoll(num))
                 : Rational(std::stoll(num.substr(0, slash)), std::stoll(num.substr(slash + 1)));
      } catch (const std::exception&) {
        throw SyntaxError("bad coefficient '" + num + "'", i);
      }
      i = star + 1;
      skip();
    }
    // the term runs to the next top-level + or -
    std::size_t j = i;
    int depth = 0;
    while (j < text.size() && !(depth == 0 && j > i && (text[j] == '+' || text[j] == '-'))) {
      if (text[j] == '(') ++depth;
      if (text[j] == ')') --depth;
      ++j;
    }
    std::string_view term = text.substr(i, j - i);
    while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
    if (term.empty()) throw SyntaxError("missing term", i);
    out.add(term == "1" ? Name{} : parse_literal(term), c);
    i = j;
    first = false;
  }
  return out;
}

}  // namespace atree
