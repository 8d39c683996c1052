#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmfock/bigint.hpp"
#include "cmfock/errors.hpp"

namespace cmfock {

// Sparse Laurent polynomial in one variable q over arbitrary-precision
// integers.  The term map holds no zero coefficients and is kept ordered by
// exponent, so equality is structural and serialization is deterministic.
// Values are immutable in spirit: every operation returns a fresh polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly q_power(long e) { return monomial(e, 1); }
  static LaurentPoly monomial(long e, Int c);
  static LaurentPoly constant(Int c) { return monomial(0, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  // Zero if absent.
  Int coeff(long e) const;
  const std::map<long, Int>& terms() const { return terms_; }

  long min_exponent() const;  // requires nonzero
  long max_exponent() const;  // requires nonzero

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  LaurentPoly scalar_mul(const Int& c) const;
  LaurentPoly shifted(long e) const;  // multiply by q^e

  // q -> q^{-1}; an involutive ring automorphism.
  LaurentPoly bar() const;
  bool is_bar_symmetric() const { return *this == bar(); }

  // Sum of all coefficients (evaluation at q = 1).
  Int eval_one() const;

  // True iff every exponent is >= 1, i.e. the polynomial lies in q.Z[q].
  bool in_qZq() const;
  // True iff all coefficients are nonnegative.
  bool nonneg_coeffs() const;

  // Exact quotient p/d; throws NotDivisible when none exists.
  static LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

  // Renders e.g. "q^2 + 3*q^-1"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void set(long e, Int c);  // drops zeros
  std::map<long, Int> terms_;
};

// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n} for n > 0; [0] = 0; [-n] = -[n].
LaurentPoly quantum_int(long n);

// [n]! = [1][2]...[n]; [0]! = 1.
LaurentPoly quantum_factorial(long n);

}  // namespace cmfock
