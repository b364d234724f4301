#include "realideal/numeric/rational.hpp"

#include <cctype>
#include <sstream>

namespace realideal {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw InvalidInput("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty number");
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    Integer num(body.substr(0, slash), 10);
    Integer den(body.substr(slash + 1), 10);
    value = make_rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot);
    std::string fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw InvalidInput("malformed decimal '" + s + "'");
    for (char c : ip + fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("malformed decimal '" + s + "'");
    Integer num(ip + fp, 10);
    Integer den = pow(Integer(10), static_cast<unsigned>(fp.size()));
    value = make_rational(num, den);
  } else {
    for (char c : body)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("malformed integer '" + s + "'");
    value = Rational(Integer(body, 10));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = pow(Integer(10), static_cast<unsigned>(digits));
  Rational scaled = q * scale;
  // round half away from zero
  Integer r = floor(Rational(abs(scaled) + Rational(1, 2)));
  if (sgn(scaled) < 0) r = -r;
  bool neg = sgn(r) < 0;
  std::string body = Integer(abs(r)).get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return neg ? "-" + body : body;
}

Integer pow(const Integer& z, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& q, unsigned e) {
  return make_rational(pow(Integer(q.get_num()), e), pow(Integer(q.get_den()), e));
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational simplest_dyadic_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidInput("empty interval for dyadic choice");
  // prefer an integer when the interval contains one
  Integer c = floor(lo) + 1;
  if (Rational(c) < hi) {
    Integer f = ceil(hi) - 1;
    if (sgn(c) <= 0 && sgn(f) >= 0) return 0;
    return sgn(c) > 0 ? Rational(c) : Rational(f);
  }
  Integer den = 2;
  for (;;) {
    Rational scaled = lo * den;
    Integer k = floor(scaled) + 1;
    Rational cand = make_rational(k, den);
    if (cand < hi) return cand;
    den *= 2;
  }
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  Rational n = b.norm();
  if (sgn(n) == 0) throw InvalidInput("division by zero Gaussian rational");
  GaussianRational num = a * b.conj();
  return {num.re / n, num.im / n};
}

std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::ostringstream os;
  if (sgn(z.re) != 0) os << to_string(z.re) << (sgn(z.im) > 0 ? "+" : "");
  os << to_string(z.im) << "*i";
  return os.str();
}

}  // namespace realideal
