#include "geochroma/surd.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace geochroma {

namespace {

using Wide = __int128;

Wide wabs(Wide v) { return v < 0 ? -v : v; }

Wide wgcd(Wide a, Wide b) {
  a = wabs(a);
  b = wabs(b);
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wgcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide lim = Wide{INT64_MAX};
  if (wabs(num) > lim || den > lim) throw std::overflow_error("rational overflow");
  return raw(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Sign of a + b sqrt(d) for rationals a, b and d > 0, by comparing squares.
int surd_sign(const Rational& a, const Rational& b, std::int64_t d) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0 || d == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d.
  const Rational a2 = a * a;
  const Rational b2d = b * b * Rational(d);
  if (a2 == b2d) return 0;
  return b2d < a2 ? sa : sb;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(Wide{a.num_} * b.num_, Wide{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return Rational::from_wide(Wide{a.num_} * b.den_, Wide{a.den_} * b.num_);
}

QuadSurd::QuadSurd(Rational a, Rational b, std::int64_t d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw std::invalid_argument("negative radicand");
  if (b_.sign() == 0 || d_ == 0) {
    b_ = Rational(0);
    d_ = 0;
    return;
  }
  const std::int64_t r = isqrt(d_);
  if (r * r == d_) {
    a_ = a_ + b_ * Rational(r);
    b_ = Rational(0);
    d_ = 0;
  }
}

int QuadSurd::sign() const { return surd_sign(a_, b_, d_); }

double QuadSurd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::int64_t QuadSurd::floor() const {
  auto f = static_cast<std::int64_t>(std::floor(to_double()));
  while ((*this - QuadSurd(Rational(f))).sign() < 0) --f;
  while ((*this - QuadSurd(Rational(f + 1))).sign() >= 0) ++f;
  return f;
}

std::string QuadSurd::str() const {
  if (d_ == 0) return a_.str();
  return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

namespace {

std::int64_t common_radicand(const QuadSurd& x, const QuadSurd& y) {
  if (x.radicand() != 0 && y.radicand() != 0 && x.radicand() != y.radicand()) {
    throw std::invalid_argument("surds with different radicands");
  }
  return x.radicand() != 0 ? x.radicand() : y.radicand();
}

}  // namespace

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  const auto d = common_radicand(x, y);
  return QuadSurd(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  const auto d = common_radicand(x, y);
  return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
  const auto d = common_radicand(x, y);
  // Multiply by the conjugate of y.
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
  if (norm.sign() == 0) throw std::domain_error("division by zero");
  const QuadSurd conj(y.a_, -y.b_, d);
  const QuadSurd top = x * conj;
  return QuadSurd(top.a_ / norm, top.b_ / norm, d);
}

QuadSurd sqrt_of(std::int64_t n) { return QuadSurd(Rational(0), Rational(1), n); }

}  // namespace geochroma
