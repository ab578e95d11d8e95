#ifndef TATE5_FIELD_HPP
#define TATE5_FIELD_HPP

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tate5 {

using Complex = std::complex<double>;

// Arbitrary-precision rational. Always reduced, denominator > 0, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars promote
  Rational(long n, long d);
  explicit Rational(mpq_class q);
  Rational(mpz_class n, mpz_class d);

  static Rational parse(std::string_view s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational pow(long e) const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

 private:
  mpq_class v_;  // kept canonical
};

std::string to_string(const Rational& r);

// Element of Q(zeta_5), coordinates in the basis {1, z, z^2, z^3} with
// z a primitive fifth root of unity (z^4 = -1-z-z^2-z^3 eagerly applied).
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long n) { c_[0] = Rational(n); }  // NOLINT: implicit by design
  Cyclo(Rational r) { c_[0] = std::move(r); }  // NOLINT
  Cyclo(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Cyclo zeta_pow(int k);       // z^k for any integer k
  static Cyclo zeta() { return zeta_pow(1); }
  static Cyclo alpha();               // z - z^2 - z^3 + z^4, alpha^2 = 5
  static Cyclo eps();                 // z + z^4 = (-1+alpha)/2
  static Cyclo eps_bar();             // z^2 + z^3 = (-1-alpha)/2
  static Cyclo eta();                 // (z - 1)/alpha

  static Cyclo parse(std::string_view s);

  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  bool is_rational() const;
  const Rational& rational_part() const;  // requires is_rational()

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
  Cyclo& operator/=(const Cyclo& o) { *this = *this / o; return *this; }
  Cyclo operator-() const;

  Cyclo scaled(const Rational& r) const;  // coordinate-wise scalar multiple

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo pow(long e) const;
  std::string str() const;

 private:
  std::array<Rational, 4> c_{};
};

// Ring automorphism z -> z^k, k in {1,2,3,4}.
Cyclo galois(int k, const Cyclo& a);
// Product of the four Galois conjugates; lands in Q.
Rational norm(const Cyclo& a);
// Multiplicative inverse; throws std::domain_error on zero.
Cyclo inv(const Cyclo& a);
// Complex embedding z -> exp(2*pi*i*k/5), k in {1,2,3,4}.
Complex embed(const Cyclo& a, int k = 1);

std::string to_string(const Cyclo& c);

}  // namespace tate5

#endif  // TATE5_FIELD_HPP
