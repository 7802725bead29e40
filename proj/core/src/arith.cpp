#include "qhb/arith.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace qhb {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw DomainError("not an integer: '" + std::string(s) + "'");
  std::string str(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(str, 10);
}

}  // namespace

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DomainError("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(long long n, long long d)
    : Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))) {}

Rational Rational::parse(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  auto den_str = s.substr(slash + 1);
  if (!all_digits(den_str)) throw DomainError("bad denominator in '" + std::string(s) + "'");
  return Rational(parse_integer(s.substr(0, slash)), mpz_class(std::string(den_str), 10));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

Int to_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DomainError("integer out of 64-bit range");
  return static_cast<Int>(z.get_si());
}

Int Rational::to_int() const {
  if (!is_integer()) throw DomainError("not an integer: " + str());
  return qhb::to_int(v_.get_num());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool NegCF::canonical() const {
  return !terms.empty() && std::all_of(terms.begin(), terms.end(), [](Int a) { return a >= 2; });
}

std::string to_string(const NegCF& cf) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < cf.terms.size(); ++i) os << (i ? "," : "") << cf.terms[i];
  os << ']';
  return os.str();
}

NegCF neg_cf_expand(const Rational& r) {
  if (r <= Rational(1)) throw DomainError("negative continued fraction needs r > 1, got " + r.str());
  NegCF cf;
  mpz_class p = r.num(), q = r.den();
  for (;;) {
    mpz_class a;
    mpz_cdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    cf.terms.push_back(to_int(a));
    mpz_class rem = a * q - p;
    if (rem == 0) break;
    p = q;
    q = rem;
  }
  return cf;
}

NegCF neg_cf_expand(Int p, Int q) { return neg_cf_expand(Rational(p, q)); }

Rational neg_cf_eval(const NegCF& cf) {
  if (cf.terms.empty()) throw DomainError("empty continued fraction");
  Rational v(cf.terms.back());
  for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
    if (v == Rational(0)) throw DomainError("non-canonical input: tail evaluates to 0 in " + to_string(cf));
    v = Rational(*it) - Rational(1) / v;
  }
  return v;
}

Int i_function(const Rational& r) {
  Int s = 0;
  for (Int a : neg_cf_expand(r).terms) s += a - 3;
  return s;
}

NegCF blow_down_reduce(const NegCF& cf) {
  if (cf.terms.empty()) throw DomainError("empty continued fraction");
  std::vector<Int> t = cf.terms;
  std::size_t head = 0;
  while (head < t.size() && t[head] == 1) {
    if (head + 1 == t.size()) return NegCF{};  // everything blew down: S^3
    ++head;
    t[head] -= 1;
  }
  NegCF out{std::vector<Int>(t.begin() + static_cast<std::ptrdiff_t>(head), t.end())};
  if (!out.canonical()) throw DomainError("malformed chain for blow-down: " + to_string(cf));
  return out;
}

NegCF riemenschneider_dual(const Rational& r) {
  if (r <= Rational(1)) throw DomainError("dual needs r > 1, got " + r.str());
  mpz_class p = r.num(), q = r.den();
  return neg_cf_expand(Rational(p, p - q));
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int mod_floor(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

Int mod_inverse(Int a, Int n) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (n == 1) return 0;
  Int r0 = n, r1 = mod_floor(a, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int k = r0 / r1;
    Int t = r0 - k * r1;
    r0 = r1;
    r1 = t;
    t = s0 - k * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw DomainError("mod_inverse: gcd(" + std::to_string(a) + "," + std::to_string(n) + ") != 1");
  return mod_floor(s0, n);
}

int euclid_steps(Int p, Int q) {
  if (p < 1 || q < 1) throw DomainError("euclid_steps needs positive arguments");
  int steps = 0;
  while (q != 0) {
    Int r = p % q;
    p = q;
    q = r;
    ++steps;
  }
  return steps;
}

Int isqrt(Int n) {
  if (n < 0) throw DomainError("isqrt of negative number");
  if (n < 2) return n;
  // Newton from above; x_{k+1} = (x_k + n/x_k)/2 decreases to floor(sqrt n).
  Int x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::optional<Int> exact_sqrt(Int n) {
  if (n < 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

Semigroup::Semigroup(Int p, Int q) : p_(p), q_(q) {
  if (p < 1 || q < 1 || gcd(p, q) != 1)
    throw DomainError("semigroup generators must be coprime positive integers");
  Int f = frobenius();
  if (f < 0) return;
  std::vector<char> in(static_cast<std::size_t>(f + 1), 0);
  for (Int x = 0; x <= f; ++x) {
    bool e = x == 0 || (x >= p && in[x - p]) || (x >= q && in[x - q]);
    in[x] = e;
    (e ? elements_ : gaps_).push_back(x);
  }
}

bool Semigroup::contains(Int x) const {
  if (x < 0) return false;
  if (x > frobenius()) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), x);
}

Int Semigroup::gamma_element(Int i) const {
  if (i < 1) throw DomainError("semigroup index is 1-based");
  auto e = static_cast<Int>(elements_.size());
  if (i <= e) return elements_[static_cast<std::size_t>(i - 1)];
  return frobenius() + 1 + (i - e - 1);
}

Int Semigroup::gap_count_from(Int j) const {
  return static_cast<Int>(gaps_.end() - std::lower_bound(gaps_.begin(), gaps_.end(), j));
}

std::vector<Int> Semigroup::gaps_desc() const { return {gaps_.rbegin(), gaps_.rend()}; }

}  // namespace qhb
