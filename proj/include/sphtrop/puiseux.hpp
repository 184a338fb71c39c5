#pragma once

#include <map>
#include <string>
#include <vector>

#include "sphtrop/ratvec.hpp"

namespace sphtrop {

/// Finite Puiseux series: sorted terms (exponent, coefficient) with
/// strictly increasing rational exponents and nonzero coefficients.
/// The zero series is the empty term list; val(0) = +inf.
class PuiseuxSeries {
public:
  PuiseuxSeries() = default;
  explicit PuiseuxSeries(Rat constant);
  static PuiseuxSeries monomial(Rat exponent, Rat coefficient);

  const std::vector<std::pair<Rat, Rat>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Least exponent; +inf for the zero series.
  ExtRat val() const;

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  PuiseuxSeries operator-() const;
  PuiseuxSeries pow(long n) const;  // negative n only for monomials

  bool operator==(const PuiseuxSeries& o) const { return terms_ == o.terms_; }

  std::string str() const;

private:
  std::vector<std::pair<Rat, Rat>> terms_;
};

/// Parses e.g. "u^2 + 3u^(5/2)", "1+u", "0", "-u^-1/2 + 2".
PuiseuxSeries parse_puiseux(const std::string& s);

/// Point over the Puiseux field.
struct PuiseuxPoint {
  std::vector<PuiseuxSeries> coords;
};

PuiseuxPoint parse_puiseux_point(const std::string& s);

/// Laurent polynomial with rational coefficients: multi-index -> coeff.
struct LaurentPoly {
  std::size_t nvars = 0;
  std::map<std::vector<long>, Rat> coeffs;

  void add_term(std::vector<long> index, Rat c);
  PuiseuxSeries evaluate(const PuiseuxPoint& x) const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
};

/// Parses e.g. "t1 + t2", "3/2 t1^2 t2^-1 - t1", with variables t1..tn.
LaurentPoly parse_laurent(const std::string& s, std::size_t nvars);

enum class SeminormFamily { monomial, homotopy };

/// One member of a seminorm family on the torus: mu = -log(lambda) as
/// an exact rational or infinity, together with the base point.
struct SeminormSample {
  ExtRat mu;
  PuiseuxPoint point;
  SeminormFamily family = SeminormFamily::monomial;
};

/// Additive value of the seminorm at a Laurent polynomial.
///
/// monomial family: min over terms of val(a_I x^I) + mu*|I|.
/// homotopy family: expand f(t*x) in the shifted basis (t-1)^J and take
/// min over J of val(c_J(x)) + mu*|J|.
ExtRat retraction_value(const SeminormSample& s, const LaurentPoly& f);

/// The mu = 0 monomial seminorm attached to x, identified by its value
/// vector; idempotent on descriptors.
RatVec retract_point(const PuiseuxPoint& x);

}  // namespace sphtrop
