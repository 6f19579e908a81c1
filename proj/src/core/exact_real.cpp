#include "core/exact_real.hpp"

#include <cmath>
#include <utility>

namespace ranum {

namespace {

Rat canonical(Rat q) {
  q.canonicalize();
  return q;
}

}  // namespace

ExactReal ExactReal::make(Rat u, Rat v, long d) {
  if (d < 0) {
    throw domain_error("negative radicand: only real quadratic fields are supported");
  }
  u = canonical(std::move(u));
  v = canonical(std::move(v));
  if (v == 0 || d == 0) {
    return ExactReal(std::move(u), Rat(0), 0);
  }
  // Pull square factors of d into v.
  long scale = 1;
  for (long p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      scale *= p;
    }
  }
  v *= scale;
  if (d == 1) {
    u += v;
    return ExactReal(std::move(u), Rat(0), 0);
  }
  return ExactReal(std::move(u), std::move(v), d);
}

long ExactReal::join_index(const ExactReal& x, const ExactReal& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw domain_error("incompatible quadratic parts: sqrt(" + std::to_string(x.d_) +
                     ") vs sqrt(" + std::to_string(y.d_) + ")");
}

ExactReal ExactReal::operator-() const { return ExactReal(-u_, -v_, d_); }

ExactReal operator+(const ExactReal& x, const ExactReal& y) {
  long d = ExactReal::join_index(x, y);
  Rat v = x.v_ + y.v_;
  if (v == 0) d = 0;
  return ExactReal(x.u_ + y.u_, std::move(v), d);
}

ExactReal operator-(const ExactReal& x, const ExactReal& y) { return x + (-y); }

ExactReal operator*(const ExactReal& x, const ExactReal& y) {
  long d = ExactReal::join_index(x, y);
  Rat u = x.u_ * y.u_ + x.v_ * y.v_ * d;
  Rat v = x.u_ * y.v_ + x.v_ * y.u_;
  if (v == 0) d = 0;
  return ExactReal(std::move(u), std::move(v), d);
}

ExactReal operator/(const ExactReal& x, const ExactReal& y) {
  if (y.is_zero()) throw domain_error("division by zero");
  long d = ExactReal::join_index(x, y);
  if (y.v_ == 0) {
    return ExactReal(x.u_ / y.u_, x.v_ / y.u_, x.d_);
  }
  // Multiply by the conjugate; the norm u^2 - v^2 d of a nonzero value is
  // nonzero because d is square-free.
  Rat norm = y.u_ * y.u_ - y.v_ * y.v_ * d;
  if (norm == 0) {
    throw internal_error("zero conjugate norm for nonzero divisor");
  }
  ExactReal conj(y.u_, -y.v_, d);
  ExactReal num = x * conj;
  return ExactReal(num.u_ / norm, num.v_ / norm, num.v_ == 0 ? 0 : d);
}

int ExactReal::sign() const {
  if (v_ == 0) return sgn(u_);
  if (u_ == 0) return sgn(v_);
  int su = sgn(u_);
  int sv = sgn(v_);
  if (su == sv) return su;
  // Opposite contributions: |u| vs |v|sqrt(d) decided by u^2 vs v^2 d.
  int c = cmp(Rat(u_ * u_), Rat(v_ * v_ * d_));
  if (c == 0) {
    throw internal_error("sqrt(" + std::to_string(d_) + ") collapsed to a rational");
  }
  return c > 0 ? su : sv;
}

Int ExactReal::floor() const {
  if (v_ == 0) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), u_.get_num_mpz_t(), u_.get_den_mpz_t());
    return q;
  }
  auto at_most = [this](const Int& n) {  // n <= value
    return (*this - ExactReal(n)).sign() >= 0;
  };
  Int lo, hi;
  if (sign() >= 0) {
    lo = 0;
    hi = 1;
    while (at_most(hi)) hi *= 2;
  } else {
    hi = 0;
    lo = -1;
    while (!at_most(lo)) lo *= 2;
  }
  // Invariant: lo <= value < hi.
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (at_most(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::string ExactReal::approx(int digits) const {
  if (digits < 1 || digits > kMaxApproxDigits) {
    throw domain_error("approx digits must lie in [1, " +
                       std::to_string(kMaxApproxDigits) + "]");
  }
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Int scaled = (*this * ExactReal(scale)).floor();
  bool negative = scaled < 0;
  Int magnitude = negative ? Int(-scaled) : scaled;
  std::string body = magnitude.get_str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<size_t>(digits), ".");
  return negative ? "-" + body : body;
}

double ExactReal::to_double() const {
  double value = u_.get_d();
  if (v_ != 0) value += v_.get_d() * std::sqrt(static_cast<double>(d_));
  return value;
}

std::string ExactReal::literal() const {
  if (is_rational()) {
    if (u_.get_den() == 1) return u_.get_num().get_str();
    return u_.get_str();
  }
  Int den;
  mpz_lcm(den.get_mpz_t(), u_.get_den_mpz_t(), v_.get_den_mpz_t());
  Int unum = Int(u_.get_num() * (den / u_.get_den()));
  Int vnum = Int(v_.get_num() * (den / v_.get_den()));
  std::string out = "(" + unum.get_str();
  out += (vnum < 0) ? "-" : "+";
  Int vmag = vnum < 0 ? Int(-vnum) : vnum;
  out += vmag.get_str() + "*sqrt" + std::to_string(d_) + ")";
  if (den != 1) out += "/" + den.get_str();
  return out;
}

ExactReal pow(const ExactReal& base, unsigned exponent) {
  ExactReal result(1);
  ExactReal acc = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * acc;
    exponent >>= 1u;
    if (exponent > 0) acc = acc * acc;
  }
  return result;
}

ExactReal inv_pow(const ExactReal& base, unsigned exponent) {
  return ExactReal(1) / pow(base, exponent);
}

ExactReal golden_ratio() {
  return ExactReal::make(Rat(1, 2), Rat(1, 2), 5);
}

}  // namespace ranum
