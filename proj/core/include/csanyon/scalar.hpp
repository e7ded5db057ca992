#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace csanyon {

using Rat = mpq_class;

// Parse "p", "-p", or "p/q" into a canonical rational. Throws on garbage.
Rat rat_from_string(const std::string& s);

// Reduced form, "/1" omitted: "20", "-2/3".
std::string rat_to_string(const Rat& q);

// True iff q is the square of a rational; on success *root >= 0.
bool rat_is_square(const Rat& q, Rat* root = nullptr);

enum class ScalarMode { Exact, Numeric };

// Element of the real quadratic extension Q(sqrt(r)), r a positive
// non-square rational, stored as a + b*sqrt(r); or a complex double in
// numeric mode. The mode is fixed at construction and never converts
// implicitly: mixing modes (or two different r with both b != 0) throws.
//
// Pure rationals are the common case and carry r = 0 as a "compatible with
// anything" marker, so Scalar(3) combines with any field. Rational square
// roots must be constructed as (a, 0): Q[x]/(x^2 - r) with square r is not a
// field and is rejected here.
class Scalar {
 public:
  Scalar() : mode_(ScalarMode::Exact), a_(0), b_(0), r_(0) {}
  Scalar(long n) : mode_(ScalarMode::Exact), a_(n), b_(0), r_(0) {}
  Scalar(int n) : Scalar(static_cast<long>(n)) {}
  explicit Scalar(const Rat& a) : mode_(ScalarMode::Exact), a_(a), b_(0), r_(0) {
    a_.canonicalize();
  }
  Scalar(const Rat& a, const Rat& b, const Rat& r);

  static Scalar numeric(std::complex<double> z);
  // Exact square root of a nonnegative rational: rational if r is a perfect
  // square, else 0 + 1*sqrt(r).
  static Scalar sqrt_rational(const Rat& r);

  ScalarMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == ScalarMode::Exact; }
  bool is_zero() const;
  bool is_rational() const { return is_exact() && b_ == 0; }

  // Exact-mode accessors; throw in numeric mode.
  const Rat& a() const { require_exact(); return a_; }
  const Rat& b() const { require_exact(); return b_; }
  const Rat& r() const { require_exact(); return r_; }
  // The unique rational value; throws if b != 0 or numeric.
  Rat rational() const;

  std::complex<double> to_complex() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  // Complex conjugation: identity in exact mode (the extension is real).
  Scalar conj() const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "a", "b*sqrt(r)", "a+b*sqrt(r)", or "(re,im)" in numeric mode.
  std::string str() const;

 private:
  void require_exact() const {
    if (!is_exact()) throw std::logic_error("exact scalar required");
  }
  // Common field radicand of two exact scalars; 0 = unconstrained.
  static Rat merge_r(const Scalar& x, const Scalar& y);
  void normalize();

  ScalarMode mode_;
  Rat a_, b_, r_;          // exact mode: a + b*sqrt(r)
  std::complex<double> z_{};  // numeric mode
};

}  // namespace csanyon
