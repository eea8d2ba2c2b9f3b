#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace swh {

// Exact rational; mpq_class keeps it canonical (lowest terms, positive denominator).
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p", "-p", "p/q"; throws swh::Error(Validation) otherwise.
  static Rational parse(std::string_view s);
  std::string str() const;

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  mpz_class floor() const;
  // floor as int64; throws on overflow
  long long floor_ll() const;
  // this - floor(this), in [0,1)
  Rational frac() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

struct RationalHash {
  size_t operator()(const Rational& r) const;
};

}  // namespace swh
