#include "swh/rational.hpp"

#include <cctype>

#include "swh/errors.hpp"

namespace swh {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::Validation, "zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

static bool valid_int(std::string_view s, bool allow_sign) {
  size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  std::string_view ns = s.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_int(ns, true) || !valid_int(ds, false))
    throw Error(ErrorKind::Validation, "malformed rational '" + std::string(s) + "'");
  std::string nstr(ns.front() == '+' ? ns.substr(1) : ns);
  mpz_class n(nstr, 10), d(std::string(ds), 10);
  if (d == 0) throw Error(ErrorKind::Validation, "zero denominator in '" + std::string(s) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

long long Rational::floor_ll() const {
  mpz_class f = floor();
  if (!f.fits_slong_p()) throw Error(ErrorKind::ResourceExhausted, "integer overflow in floor");
  return f.get_si();
}

Rational Rational::frac() const { return *this - Rational(mpq_class(floor())); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::Validation, "division by zero");
  q_ /= o.q_;
  return *this;
}

size_t RationalHash::operator()(const Rational& r) const {
  size_t h1 = mpz_get_ui(r.raw().get_num_mpz_t()) * 0x9E3779B97F4A7C15ull;
  size_t h2 = mpz_get_ui(r.raw().get_den_mpz_t());
  return h1 ^ (h2 + 0x7F4A7C15 + (h1 << 6) + (h1 >> 2)) ^ static_cast<size_t>(r.sign() + 1);
}

}  // namespace swh
