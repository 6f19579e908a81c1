#pragma once

#include <gmpxx.h>

#include <string>

#include "core/errors.hpp"

namespace ranum {

using Rat = mpq_class;
using Int = mpz_class;

// Largest digit count accepted by ExactReal::approx.
inline constexpr int kMaxApproxDigits = 4096;

// A number u + v*sqrt(d) with rational u, v and square-free integer d >= 0.
// Canonical form: v == 0 implies d == 0, so pure rationals compare equal
// regardless of how they were built. Values are immutable; every operation
// returns a fresh value and is safe to call concurrently.
class ExactReal {
 public:
  ExactReal() : d_(0) {}
  ExactReal(long n) : u_(n), d_(0) {}          // NOLINT: implicit by design
  ExactReal(const Int& n) : u_(n), d_(0) {}    // NOLINT
  ExactReal(const Rat& q) : u_(q), d_(0) { u_.canonicalize(); }  // NOLINT

  // u + v*sqrt(d). Square factors of d are folded into v, d in {0,1}
  // collapses to the rational form. Negative d is rejected.
  static ExactReal make(Rat u, Rat v, long d);

  const Rat& rational_part() const { return u_; }
  const Rat& surd_coeff() const { return v_; }
  long surd_index() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return u_ == 0 && v_ == 0; }

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator-(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator*(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator/(const ExactReal& x, const ExactReal& y);

  // Exact sign of the value: -1, 0 or +1. Never consults floating point.
  int sign() const;

  // Exact three-way comparison; throws domain_error when the two values
  // live in different quadratic extensions.
  int compare(const ExactReal& other) const { return (*this - other).sign(); }

  bool operator==(const ExactReal& o) const {
    return d_ == o.d_ && u_ == o.u_ && v_ == o.v_;
  }
  bool operator!=(const ExactReal& o) const { return !(*this == o); }
  bool operator<(const ExactReal& o) const { return compare(o) < 0; }
  bool operator<=(const ExactReal& o) const { return compare(o) <= 0; }
  bool operator>(const ExactReal& o) const { return compare(o) > 0; }
  bool operator>=(const ExactReal& o) const { return compare(o) >= 0; }

  // Greatest integer <= value, found by exact integer bracketing refined
  // by bisection (no floating point anywhere on the decision path).
  Int floor() const;
  Int ceil() const { return -((-*this).floor()); }

  // Decimal string with exactly `digits` fractional digits, truncated
  // toward minus infinity. digits in [1, kMaxApproxDigits].
  std::string approx(int digits) const;

  // Display only; never used on a decision path.
  double to_double() const;

  // Exact literal in the base-literal grammar; re-parses to an equal value.
  std::string literal() const;

 private:
  ExactReal(Rat u, Rat v, long d) : u_(std::move(u)), v_(std::move(v)), d_(d) {}

  // Shared d for a binary operation; domain_error when both sides carry
  // distinct irrational parts.
  static long join_index(const ExactReal& x, const ExactReal& y);

  Rat u_;
  Rat v_;
  long d_;
};

ExactReal pow(const ExactReal& base, unsigned exponent);

// base^(-exponent); domain_error when base is zero.
ExactReal inv_pow(const ExactReal& base, unsigned exponent);

// (1 + sqrt(5)) / 2.
ExactReal golden_ratio();

}  // namespace ranum
