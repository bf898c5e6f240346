// Exact arithmetic in Q and Q(sqrt d).
#pragma once

#include <cstdint>
#include <string>

namespace geochroma {

/// Normalized fraction num/den with den > 0. Intermediate products use 128
/// bits; a result that does not fit in 64 bits throws std::overflow_error.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return raw(-num_, den_); }

  /// Normalizes a 128-bit fraction; throws std::overflow_error if it does
  /// not fit.
  static Rational from_wide(__int128 num, __int128 den);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return (a - b).sign() <= 0; }

 private:
  static Rational raw(std::int64_t num, std::int64_t den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// a + b*sqrt(d), d a positive non-square integer (or b == 0).
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(Rational a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(Rational a, Rational b, std::int64_t d);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  std::int64_t radicand() const { return d_; }

  int sign() const;
  double to_double() const;
  /// Greatest integer <= value, decided exactly.
  std::int64_t floor() const;
  std::string str() const;

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
  QuadSurd operator-() const { return QuadSurd(-a_, -b_, d_); }
  friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() <= 0; }
  friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() == 0; }

 private:
  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

/// sqrt(n) as a surd; exact integer when n is a perfect square.
QuadSurd sqrt_of(std::int64_t n);

}  // namespace geochroma
