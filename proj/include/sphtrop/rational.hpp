#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace sphtrop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sgn(const Rat& q) { return q.sign(); }

/// Element of Q u {+inf}. Used for additive valuations and for
/// evaluations of extended functionals.
class ExtRat {
public:
  ExtRat() : inf_(false), v_(0) {}
  ExtRat(Rat v) : inf_(false), v_(std::move(v)) {}
  ExtRat(long v) : inf_(false), v_(v) {}
  static ExtRat infinity() {
    ExtRat e;
    e.inf_ = true;
    return e;
  }

  bool is_infinity() const { return inf_; }
  const Rat& finite() const {
    if (inf_) throw std::logic_error("ExtRat: value is infinite");
    return v_;
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtRat(a.v_ + b.v_);
  }
  friend ExtRat min(const ExtRat& a, const ExtRat& b) {
    if (a.inf_) return b;
    if (b.inf_) return a;
    return ExtRat(a.v_ < b.v_ ? a.v_ : b.v_);
  }
  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

private:
  bool inf_;
  Rat v_;
};

/// Parses "p", "p/q" or "inf" into an ExtRat. Throws on malformed input.
ExtRat parse_ext_rat(const std::string& s);
Rat parse_rat(const std::string& s);

}  // namespace sphtrop
