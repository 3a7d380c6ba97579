#include "kideal/qplus.hpp"

namespace kideal {

namespace mp = boost::multiprecision;

QPlus::QPlus(long long numerator, long long denominator) {
  if (numerator < 0 || denominator < 0)
    throw parameter_error("negative rational rejected");
  if (denominator == 0) throw parameter_error("zero denominator");
  v_ = mp::cpp_rational(numerator, denominator);
}

QPlus::QPlus(mp::cpp_rational v) : v_(std::move(v)) {
  if (v_ < 0) throw parameter_error("negative rational rejected");
}

QPlus QPlus::from_integer(long long n) { return QPlus(n, 1); }

QPlus QPlus::parse(const std::string& text) {
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!digits(num) || !digits(den))
    throw parameter_error("rational must be \"p\" or \"p/q\" in digits: " +
                          text);
  mp::cpp_int d(den);
  if (d.is_zero()) throw parameter_error("zero denominator: " + text);
  return QPlus(mp::cpp_rational(mp::cpp_int(num), d));
}

QPlus QPlus::operator+(const QPlus& o) const { return QPlus(v_ + o.v_); }
QPlus QPlus::operator*(const QPlus& o) const { return QPlus(v_ * o.v_); }

QPlus QPlus::operator/(const QPlus& o) const {
  if (o.is_zero()) throw domain_error("division by zero");
  return QPlus(v_ / o.v_);
}

QPlus QPlus::reciprocal() const {
  if (is_zero()) throw domain_error("zero has no reciprocal");
  return QPlus(1 / v_);
}

std::optional<QPlus> QPlus::try_sub(const QPlus& o) const {
  if (v_ < o.v_) return std::nullopt;
  return QPlus(v_ - o.v_);
}

std::string QPlus::str() const {
  return mp::numerator(v_).str() + "/" + mp::denominator(v_).str();
}

}  // namespace kideal
