#include "reflquot/rational.hpp"

#include <stdexcept>

namespace reflquot {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_int(num)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class p(strip_plus(num), 10);
  mpz_class q(1);
  if (slash != std::string_view::npos) {
    const auto den = text.substr(slash + 1);
    if (!valid_int(den) || den[0] == '-' || den[0] == '+') {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    q = mpz_class(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(mpq_class(p, q));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::overflow_error("rational " + to_string() + " is not an integer");
  const mpz_class n = value_.get_num();
  if (!n.fits_slong_p()) throw std::overflow_error("integer " + to_string() + " exceeds int64");
  return n.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  // Canonical form makes (num, den) a faithful key.
  constexpr unsigned long kPrime = 4294967291UL;
  const std::size_t h1 = mpz_fdiv_ui(value_.get_num_mpz_t(), kPrime);
  const std::size_t h2 = mpz_fdiv_ui(value_.get_den_mpz_t(), kPrime);
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(q);
}

Rational ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace reflquot
