#include "tate5/field.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tate5 {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
  if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpz_class n, mpz_class d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(std::move(n), std::move(d));
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class r(1);
  mpq_class base = v_;
  long k = e;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return Rational(r);
}

Rational Rational::parse(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("Rational::parse: bad input '" + std::string(s) + "'"); };
  std::string txt(s);
  if (txt.empty()) throw bad();
  try {
    auto slash = txt.find('/');
    if (slash == std::string::npos) {
      mpz_class n(txt);
      return Rational(mpq_class(n));
    }
    mpz_class n(txt.substr(0, slash));
    mpz_class d(txt.substr(slash + 1));
    if (d == 0) throw bad();
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

std::string to_string(const Rational& r) { return r.str(); }

// ---------------------------------------------------------------------------

namespace {

// Reduce a coordinate vector on {1, z, ..., z^6} into the canonical basis.
std::array<Rational, 4> reduce7(std::array<Rational, 7> w) {
  // z^5 = 1, z^6 = z
  w[0] += w[5];
  w[1] += w[6];
  // z^4 = -1 - z - z^2 - z^3
  std::array<Rational, 4> out{};
  for (int i = 0; i < 4; ++i) out[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] - w[4];
  return out;
}

}  // namespace

Cyclo Cyclo::zeta_pow(int k) {
  int e = k % 5;
  if (e < 0) e += 5;
  if (e == 4) return Cyclo(Rational(-1), Rational(-1), Rational(-1), Rational(-1));
  Cyclo z;
  std::array<Rational, 4> c{};
  c[static_cast<size_t>(e)] = Rational(1);
  z.c_ = c;
  return z;
}

Cyclo Cyclo::alpha() {
  // z - z^2 - z^3 + z^4 = -1 - 2 z^2 - 2 z^3
  return Cyclo(Rational(-1), Rational(0), Rational(-2), Rational(-2));
}

Cyclo Cyclo::eps() {
  // z + z^4 = -1 - z^2 - z^3
  return Cyclo(Rational(-1), Rational(0), Rational(-1), Rational(-1));
}

Cyclo Cyclo::eps_bar() { return Cyclo(Rational(0), Rational(0), Rational(1), Rational(1)); }

Cyclo Cyclo::eta() { return (zeta() - Cyclo(1)) * inv(alpha()); }

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclo::is_rational() const {
  return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

const Rational& Cyclo::rational_part() const {
  if (!is_rational()) throw std::domain_error("Cyclo: not a rational value: " + str());
  return c_[0];
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  for (int i = 0; i < 4; ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  for (int i = 0; i < 4; ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  std::array<Rational, 7> w{};
  for (int i = 0; i < 4; ++i) {
    if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
      w[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
  }
  Cyclo r;
  r.c_ = reduce7(std::move(w));
  return r;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * inv(b); }

Cyclo Cyclo::operator-() const {
  Cyclo r;
  for (int i = 0; i < 4; ++i) r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
  return r;
}

Cyclo Cyclo::scaled(const Rational& r) const {
  Cyclo out;
  for (int i = 0; i < 4; ++i) out.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * r;
  return out;
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inv(*this).pow(-e);
  Cyclo r(1), base = *this;
  long k = e;
  while (k > 0) {
    if (k & 1) r *= base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Cyclo galois(int k, const Cyclo& a) {
  if (k < 1 || k > 4) throw std::invalid_argument("galois: k must be in {1,2,3,4}");
  std::array<Rational, 7> w{};
  for (int j = 0; j < 4; ++j) w[static_cast<size_t>((j * k) % 5)] += a[j];
  Cyclo r;
  // reuse the z^4 reduction; entries 5,6 are already zero
  std::array<Rational, 4> out{};
  for (int i = 0; i < 4; ++i) out[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] - w[4];
  r = Cyclo(out[0], out[1], out[2], out[3]);
  return r;
}

Rational norm(const Cyclo& a) {
  Cyclo p = a * galois(2, a) * galois(3, a) * galois(4, a);
  return p.rational_part();
}

Cyclo inv(const Cyclo& a) {
  if (a.is_zero()) throw std::domain_error("Cyclo: inverse of zero");
  Cyclo cof = galois(2, a) * galois(3, a) * galois(4, a);
  Rational n = (a * cof).rational_part();
  return cof.scaled(n.inverse());
}

Complex embed(const Cyclo& a, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("embed: k must be in {1,2,3,4}");
  Complex acc(a[0].to_double(), 0.0);
  for (int j = 1; j < 4; ++j) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(j * k) / 5.0;
    acc += a[j].to_double() * Complex(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string Cyclo::str() const {
  if (is_rational()) return c_[0].str();
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += c_[static_cast<size_t>(i)].str();
  }
  s += "]";
  return s;
}

std::string to_string(const Cyclo& c) { return c.str(); }

Cyclo Cyclo::parse(std::string_view s) {
  // either a plain rational or a 4-tuple [c0,c1,c2,c3]
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("Cyclo::parse: empty input");
  if (s.front() != '[') return Cyclo(Rational::parse(s));
  if (s.back() != ']') throw std::invalid_argument("Cyclo::parse: missing ']'");
  s = s.substr(1, s.size() - 2);
  std::array<Rational, 4> c{};
  size_t idx = 0;
  size_t pos = 0;
  while (idx < 4) {
    size_t comma = s.find(',', pos);
    std::string_view tok =
        comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    c[idx] = Rational::parse(tok);
    ++idx;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (idx != 4) throw std::invalid_argument("Cyclo::parse: expected 4 coordinates");
  return Cyclo(c[0], c[1], c[2], c[3]);
}

}  // namespace tate5
