#include "cmfock/laurent.hpp"

#include <sstream>

namespace cmfock {

LaurentPoly LaurentPoly::monomial(long e, Int c) {
  LaurentPoly p;
  p.set(e, std::move(c));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Int LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exponent() const { return terms_.begin()->first; }
long LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::set(long e, Int c) {
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = std::move(c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Int prod = c1 * c2;
      auto it = r.terms_.find(e1 + e2);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e1 + e2, std::move(prod));
      } else {
        it->second += prod;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::scalar_mul(const Int& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r;
  for (const auto& [e0, c] : terms_) r.terms_.emplace(e0 + e, c);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::in_qZq() const {
  return terms_.empty() || terms_.begin()->first >= 1;
}

bool LaurentPoly::nonneg_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& p,
                                      const LaurentPoly& d) {
  if (d.is_zero()) fail(ErrorCode::NotDivisible, "division by zero");
  if (p.is_zero()) return zero();
  // Long division from the top exponent.  Quotient exponents are confined to
  // [min(p)-min(d), max(p)-max(d)]; leaving that range means no exact
  // quotient exists.
  const long lo_bound = p.min_exponent() - d.min_exponent();
  LaurentPoly r = p;
  LaurentPoly q;
  const long de = d.max_exponent();
  const Int& dc = d.terms().rbegin()->second;
  while (!r.is_zero()) {
    long re = r.max_exponent();
    Int rc = r.terms().rbegin()->second;
    if (rc % dc != 0 || re - de < lo_bound)
      fail(ErrorCode::NotDivisible, "no exact quotient: " + p.str() + " / " + d.str());
    LaurentPoly t = monomial(re - de, rc / dc);
    q += t;
    r -= t * d;
  }
  return q;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent first, the usual reading order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Int a = c < 0 ? Int(-c) : c;
    long e = it->first;
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly quantum_int(long n) {
  if (n == 0) return LaurentPoly::zero();
  if (n < 0) return -quantum_int(-n);
  LaurentPoly p;
  for (long e = n - 1; e >= 1 - n; e -= 2) p += LaurentPoly::q_power(e);
  return p;
}

LaurentPoly quantum_factorial(long n) {
  if (n < 0) fail(ErrorCode::BadInput, "quantum_factorial of negative n");
  LaurentPoly p = LaurentPoly::one();
  for (long k = 2; k <= n; ++k) p = p * quantum_int(k);
  return p;
}

}  // namespace cmfock
