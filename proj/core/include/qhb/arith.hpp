#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qhb {

using Int = std::int64_t;

// Precondition violations on mathematical inputs (non-coprime, out of range...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inputs outside what an algorithm supports (indefinite forms, bad vertices...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact fraction, always reduced with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& n) : v_(n) {}             // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& n, const mpz_class& d);
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  mpz_class floor() const;
  mpz_class ceil() const;
  // Throws DomainError if not an integer fitting in Int.
  Int to_int() const;

  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

Int to_int(const mpz_class& z);

// Negative continued fraction a_1 - 1/(a_2 - 1/(...)).
struct NegCF {
  std::vector<Int> terms;

  bool canonical() const;
  friend bool operator==(const NegCF&, const NegCF&) = default;
};

std::string to_string(const NegCF& cf);

NegCF neg_cf_expand(const Rational& r);
NegCF neg_cf_expand(Int p, Int q);
Rational neg_cf_eval(const NegCF& cf);
Int i_function(const Rational& r);
NegCF blow_down_reduce(const NegCF& cf);
NegCF riemenschneider_dual(const Rational& r);

Int gcd(Int a, Int b);
Int mod_floor(Int a, Int n);
Int mod_inverse(Int a, Int n);
int euclid_steps(Int p, Int q);
std::optional<Int> exact_sqrt(Int n);
Int isqrt(Int n);

// Numerical semigroup <p,q>, gaps materialized up to the Frobenius number.
class Semigroup {
 public:
  Semigroup(Int p, Int q);

  Int p() const { return p_; }
  Int q() const { return q_; }
  Int frobenius() const { return p_ * q_ - p_ - q_; }
  Int genus() const { return static_cast<Int>(gaps_.size()); }

  bool contains(Int x) const;
  // i-th smallest element, 1-based: gamma_element(1) == 0.
  Int gamma_element(Int i) const;
  // Number of gaps >= j.
  Int gap_count_from(Int j) const;
  // Gaps in decreasing order.
  std::vector<Int> gaps_desc() const;

 private:
  Int p_, q_;
  std::vector<Int> gaps_;      // ascending
  std::vector<Int> elements_;  // ascending, elements below the conductor
};

}  // namespace qhb
