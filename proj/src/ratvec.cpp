#include "sphtrop/ratvec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sphtrop {

ExtRat parse_ext_rat(const std::string& s) {
  if (s == "inf" || s == "+inf" || s == "infinity") return ExtRat::infinity();
  return ExtRat(parse_rat(s));
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

RatVec neg(const RatVec& v) { return scale(Rat(-1), v); }

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatVec primitive(const RatVec& v) {
  if (is_zero(v)) return v;
  Int l = 1;
  for (const Rat& x : v) l = boost::multiprecision::lcm(l, den(x));
  Int g = 0;
  for (const Rat& x : v) g = boost::multiprecision::gcd(g, num(x) * (l / den(x)));
  Rat c(l, g);
  return scale(c, v);
}

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

std::vector<std::size_t> rref(std::vector<RatVec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t dim = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = Rat(1) / rows[r][c];
    rows[r] = scale(inv, rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][c] != 0) rows[i] = sub(rows[i], scale(rows[i][c], rows[r]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<RatVec> row_space_basis(std::vector<RatVec> rows) {
  rref(rows);
  for (auto& row : rows) row = primitive(row);
  return rows;
}

std::size_t rank(std::vector<RatVec> rows) {
  return rref(rows).size();
}

std::vector<RatVec> null_space(std::vector<RatVec> rows, std::size_t dim) {
  auto pivots = rref(rows);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t c = 0; c < dim; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(dim, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
    basis.push_back(v);
  }
  std::vector<RatVec> out = basis;
  rref(out);
  for (auto& row : out) row = primitive(row);
  return out;
}

std::optional<std::vector<Rat>> solve_in_row_span(const std::vector<RatVec>& rows,
                                                  const RatVec& target) {
  // Augment with an indicator per row to recover coefficients.
  if (rows.empty()) {
    if (is_zero(target)) return std::vector<Rat>{};
    return std::nullopt;
  }
  const std::size_t dim = target.size();
  std::vector<RatVec> aug;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RatVec r = rows[i];
    r.resize(dim + rows.size(), Rat(0));
    r[dim + i] = 1;
    aug.push_back(std::move(r));
  }
  rref(aug);
  RatVec residual = target;
  std::vector<Rat> coeffs(rows.size(), Rat(0));
  for (const auto& row : aug) {
    std::size_t lead = 0;
    while (lead < dim && row[lead] == 0) ++lead;
    if (lead == dim) continue;
    Rat c = residual[lead] / row[lead];
    for (std::size_t j = 0; j < dim; ++j) residual[j] -= c * row[j];
    for (std::size_t j = 0; j < rows.size(); ++j) coeffs[j] += c * row[dim + j];
  }
  if (!is_zero(residual)) return std::nullopt;
  return coeffs;
}

RatVec apply_rows(const std::vector<RatVec>& rows, const RatVec& v) {
  RatVec out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = dot(rows[i], v);
  return out;
}

}  // namespace sphtrop
