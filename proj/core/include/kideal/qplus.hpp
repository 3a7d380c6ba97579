#ifndef KIDEAL_QPLUS_HPP
#define KIDEAL_QPLUS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "kideal/errors.hpp"

namespace kideal {

// Exact nonnegative rational, stored reduced.  There is deliberately no
// operator-: subtraction is partial on this carrier, and only try_sub
// exposes it.  That absence is what the whole subtractive-closure story
// hinges on, so the type enforces it.
class QPlus {
 public:
  QPlus() = default;  // zero
  QPlus(long long numerator, long long denominator);

  static QPlus from_integer(long long n);
  static QPlus parse(const std::string& text);  // "p/q" or "p", digits only
  static QPlus zero() { return QPlus(); }
  static QPlus one() { return from_integer(1); }

  QPlus operator+(const QPlus& o) const;
  QPlus operator*(const QPlus& o) const;
  QPlus operator/(const QPlus& o) const;  // dividing by zero is a domain_error
  QPlus reciprocal() const;

  // this - o when this >= o, otherwise nothing.
  std::optional<QPlus> try_sub(const QPlus& o) const;

  bool operator==(const QPlus& o) const { return v_ == o.v_; }
  bool operator!=(const QPlus& o) const { return v_ != o.v_; }
  bool operator<(const QPlus& o) const { return v_ < o.v_; }
  bool operator<=(const QPlus& o) const { return v_ <= o.v_; }
  bool operator>(const QPlus& o) const { return v_ > o.v_; }
  bool operator>=(const QPlus& o) const { return v_ >= o.v_; }

  bool is_zero() const { return v_.is_zero(); }

  // Always "p/q" with gcd(p, q) = 1, e.g. "3/1", "0/1", "2/5".
  std::string str() const;

  const boost::multiprecision::cpp_rational& value() const { return v_; }

 private:
  explicit QPlus(boost::multiprecision::cpp_rational v);
  boost::multiprecision::cpp_rational v_;
};

}  // namespace kideal

#endif
