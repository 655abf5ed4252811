#include "linecolor/rational.hpp"

#include <cctype>
#include <ostream>

namespace linecolor {

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = big_gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

bool parse_integer(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = BigInt(s);
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  BigInt n, d;
  if (slash == std::string::npos) {
    if (!parse_integer(text, n))
      throw std::invalid_argument("Rational::parse: bad value '" + text + "'");
    return Rational(std::move(n));
  }
  if (!parse_integer(text.substr(0, slash), n) ||
      !parse_integer(text.substr(slash + 1), d))
    throw std::invalid_argument("Rational::parse: bad value '" + text + "'");
  if (d == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
  return Rational(std::move(n), std::move(d));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace linecolor
