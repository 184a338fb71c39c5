#include "sphtrop/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sphtrop {

PuiseuxSeries::PuiseuxSeries(Rat constant) {
  if (constant != 0) terms_.emplace_back(Rat(0), std::move(constant));
}

PuiseuxSeries PuiseuxSeries::monomial(Rat exponent, Rat coefficient) {
  PuiseuxSeries s;
  if (coefficient != 0) s.terms_.emplace_back(std::move(exponent), std::move(coefficient));
  return s;
}

ExtRat PuiseuxSeries::val() const {
  if (terms_.empty()) return ExtRat::infinity();
  return ExtRat(terms_.front().first);
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries out;
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Rat c = a.terms_[i].second + b.terms_[j].second;
      if (c != 0) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_back(e, -c);
  return out;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::map<Rat, Rat> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  }
  PuiseuxSeries out;
  for (auto& [e, c] : acc) {
    if (c != 0) out.terms_.emplace_back(e, std::move(c));
  }
  return out;
}

PuiseuxSeries PuiseuxSeries::pow(long n) const {
  if (n == 0) return PuiseuxSeries(Rat(1));
  if (n < 0) {
    if (terms_.size() != 1)
      throw std::domain_error("negative power of a non-monomial Puiseux series");
    const auto& [e, c] = terms_.front();
    Rat e2 = e * n;
    Rat c2 = 1;
    for (long i = 0; i < -n; ++i) c2 /= c;
    return monomial(e2, c2);
  }
  PuiseuxSeries out(Rat(1));
  for (long i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::string PuiseuxSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat ac = abs(c);
    if (e == 0) {
      os << ac.str();
    } else {
      if (ac != 1) os << ac.str() << "*";
      os << "u";
      if (e != 1) os << "^(" << e.str() << ")";
    }
    first = false;
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what +
                                " in \"" + s + "\"");
  }
};

// signed rational: [-] digits [/ digits]
Rat parse_rat_at(Cursor& c, bool allow_sign = true) {
  c.skip_ws();
  std::string tok;
  if (allow_sign && (c.peek() == '-' || c.peek() == '+')) tok.push_back(c.s[c.i++]);
  c.skip_ws();
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected number");
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    tok.push_back(c.s[c.i++]);
  }
  if (c.peek() == '/') {
    tok.push_back('/');
    ++c.i;
    c.skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected denominator");
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      tok.push_back(c.s[c.i++]);
    }
  }
  return parse_rat(tok);
}

// exponent after '^': optionally wrapped in () or {}
Rat parse_exponent(Cursor& c) {
  char close = 0;
  if (c.eat('(')) close = ')';
  else if (c.eat('{')) close = '}';
  Rat e = parse_rat_at(c);
  if (close && !c.eat(close)) c.fail("unbalanced exponent bracket");
  return e;
}

}  // namespace

PuiseuxSeries parse_puiseux(const std::string& s) {
  Cursor c{s};
  PuiseuxSeries out;
  bool first = true;
  while (!c.at_end()) {
    int sign = 1;
    if (c.eat('-')) sign = -1;
    else if (c.eat('+')) {
      if (first) c.fail("unexpected '+'");
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    Rat coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_rat_at(c, false);
      have_coeff = true;
      c.eat('*');
    }
    Rat expo = 0;
    if (c.peek() == 'u') {
      ++c.i;
      expo = 1;
      if (c.eat('^')) expo = parse_exponent(c);
    } else if (!have_coeff) {
      c.fail("expected coefficient or 'u'");
    }
    out = out + PuiseuxSeries::monomial(expo, sign * coeff);
    first = false;
  }
  if (first) throw std::invalid_argument("empty Puiseux literal");
  return out;
}

PuiseuxPoint parse_puiseux_point(const std::string& s) {
  auto l = s.find('(');
  auto r = s.rfind(')');
  if (l == std::string::npos || r == std::string::npos || l >= r)
    throw std::invalid_argument("point must be parenthesized, e.g. (u, u^2)");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((i < l || i > r) && !std::isspace(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("unexpected text around the point literal");
  }
  std::string body = s.substr(l + 1, r - l - 1);
  PuiseuxPoint p;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && (body[i] == '(' || body[i] == '{')) ++depth;
    if (i < body.size() && (body[i] == ')' || body[i] == '}')) --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      p.coords.push_back(parse_puiseux(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  return p;
}

void LaurentPoly::add_term(std::vector<long> index, Rat c) {
  if (index.size() != nvars) throw std::invalid_argument("LaurentPoly: bad index length");
  Rat& slot = coeffs[std::move(index)];
  slot += c;
  // prune below; map iterators stay valid
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second == 0) it = coeffs.erase(it);
    else ++it;
  }
}

PuiseuxSeries LaurentPoly::evaluate(const PuiseuxPoint& x) const {
  if (x.coords.size() != nvars) throw std::invalid_argument("evaluate: dimension mismatch");
  PuiseuxSeries out;
  for (const auto& [idx, c] : coeffs) {
    PuiseuxSeries term{c};
    for (std::size_t i = 0; i < nvars; ++i) {
      if (idx[i] != 0) term = term * x.coords[i].pow(idx[i]);
    }
    out = out + term;
  }
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("LaurentPoly+: arity mismatch");
  LaurentPoly out = a;
  for (const auto& [idx, c] : b.coeffs) {
    out.coeffs[idx] += c;
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
    if (it->second == 0) it = out.coeffs.erase(it);
    else ++it;
  }
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("LaurentPoly*: arity mismatch");
  LaurentPoly out;
  out.nvars = a.nvars;
  for (const auto& [ia, ca] : a.coeffs) {
    for (const auto& [ib, cb] : b.coeffs) {
      std::vector<long> idx(a.nvars);
      for (std::size_t i = 0; i < a.nvars; ++i) idx[i] = ia[i] + ib[i];
      out.coeffs[idx] += ca * cb;
    }
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
    if (it->second == 0) it = out.coeffs.erase(it);
    else ++it;
  }
  return out;
}

LaurentPoly parse_laurent(const std::string& s, std::size_t nvars) {
  Cursor c{s};
  LaurentPoly out;
  out.nvars = nvars;
  bool first = true;
  while (!c.at_end()) {
    int sign = 1;
    if (c.eat('-')) sign = -1;
    else if (c.eat('+')) {
      if (first) c.fail("unexpected '+'");
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    Rat coeff = 1;
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_rat_at(c, false);
      saw_anything = true;
    }
    std::vector<long> idx(nvars, 0);
    while (true) {
      c.eat('*');
      if (c.peek() != 't') break;
      ++c.i;
      std::size_t var = 1;
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        var = 0;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
          var = var * 10 + (c.s[c.i++] - '0');
        }
      } else if (nvars != 1) {
        c.fail("variable index required");
      }
      if (var < 1 || var > nvars) c.fail("variable index out of range");
      long e = 1;
      if (c.eat('^')) {
        Rat re = parse_exponent(c);
        if (den(re) != 1) c.fail("integer exponent required");
        e = static_cast<long>(num(re));
      }
      idx[var - 1] += e;
      saw_anything = true;
    }
    if (!saw_anything) c.fail("expected term");
    out.add_term(idx, sign * coeff);
    first = false;
  }
  if (first) throw std::invalid_argument("empty Laurent literal");
  return out;
}

namespace {

ExtRat mu_times(const ExtRat& mu, long n) {
  if (mu.is_infinity()) {
    if (n == 0) return ExtRat(Rat(0));
    if (n > 0) return ExtRat::infinity();
    throw std::domain_error("mu = infinity with a negative total degree");
  }
  return ExtRat(mu.finite() * n);
}

Int binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

ExtRat retraction_value(const SeminormSample& s, const LaurentPoly& f) {
  const auto& x = s.point;
  if (x.coords.size() != f.nvars)
    throw std::invalid_argument("retraction_value: dimension mismatch");

  if (s.family == SeminormFamily::monomial) {
    for (const auto& c : x.coords) {
      if (c.is_zero())
        throw std::domain_error("monomial family requires nonzero coordinates");
    }
    ExtRat best = ExtRat::infinity();
    for (const auto& [idx, coeff] : f.coeffs) {
      Rat v = 0;
      long total = 0;
      for (std::size_t i = 0; i < f.nvars; ++i) {
        v += idx[i] * x.coords[i].val().finite();
        total += idx[i];
      }
      best = min(best, ExtRat(v) + mu_times(s.mu, total));
    }
    return best;
  }

  // Homotopy family: coefficients of f(t*x) in the (t-1) basis. A unit
  // power of t is factored out first so the expansion is polynomial;
  // the t_i have value zero in this family, so the result is unchanged.
  std::vector<long> shift(f.nvars, 0);
  for (const auto& [idx, coeff] : f.coeffs) {
    for (std::size_t i = 0; i < f.nvars; ++i) shift[i] = std::max(shift[i], -idx[i]);
  }
  std::map<std::vector<long>, PuiseuxSeries> shifted;
  for (const auto& [idx, coeff] : f.coeffs) {
    PuiseuxSeries cs{coeff};
    for (std::size_t i = 0; i < f.nvars; ++i) {
      if (idx[i] != 0) cs = cs * x.coords[i].pow(idx[i]);
    }
    // t^(idx+shift) = prod (1+T_i)^(idx_i+shift_i), all exponents >= 0
    std::vector<std::vector<long>> js{std::vector<long>(f.nvars, 0)};
    std::vector<PuiseuxSeries> cf{cs};
    for (std::size_t i = 0; i < f.nvars; ++i) {
      long e = idx[i] + shift[i];
      std::vector<std::vector<long>> njs;
      std::vector<PuiseuxSeries> ncf;
      for (std::size_t t = 0; t < js.size(); ++t) {
        for (long j = 0; j <= e; ++j) {
          auto J = js[t];
          J[i] = j;
          njs.push_back(std::move(J));
          ncf.push_back(cf[t] * PuiseuxSeries(Rat(binom(e, j))));
        }
      }
      js = std::move(njs);
      cf = std::move(ncf);
    }
    for (std::size_t t = 0; t < js.size(); ++t) shifted[js[t]] = shifted[js[t]] + cf[t];
  }
  ExtRat best = ExtRat::infinity();
  for (const auto& [J, cs] : shifted) {
    if (cs.is_zero()) continue;
    long total = 0;
    for (long j : J) total += j;
    best = min(best, cs.val() + mu_times(s.mu, total));
  }
  return best;
}

RatVec retract_point(const PuiseuxPoint& x) {
  RatVec v;
  for (const auto& c : x.coords) {
    if (c.is_zero()) throw std::domain_error("retract_point: zero coordinate");
    v.push_back(c.val().finite());
  }
  return v;
}

}  // namespace sphtrop
