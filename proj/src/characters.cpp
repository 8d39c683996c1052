#include "cmfock/characters.hpp"

#include <algorithm>
#include <sstream>

namespace cmfock {

bool Character::operator<(const Character& o) const {
  if (level != o.level) return level < o.level;
  if (rank != o.rank) return rank < o.rank;
  return multiplicities < o.multiplicities;
}

std::string Character::str() const {
  if (multiplicities.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mp, k] : multiplicities) {
    if (!first) os << " + ";
    first = false;
    if (k != 1) os << k.str() << "*";
    os << "chi" << mp.str();
  }
  return os.str();
}

Character evaluate_at_one(const FockVector& v) {
  Character chi;
  chi.level = v.charge().level();
  chi.rank = v.rank();
  for (const auto& [mp, c] : v.terms()) {
    Int k = c.eval_one();
    if (k < 0)
      fail(ErrorCode::NegativeMultiplicity,
           "coefficient of " + mp.str() + " evaluates to " + k.str());
    if (k != 0) chi.multiplicities.emplace(mp, std::move(k));
  }
  return chi;
}

namespace {

// Contents at which some support index has an addable box.
std::set<int> active_contents(const FockVector& v) {
  std::set<int> contents;
  for (const auto& [mp, c] : v.terms())
    for (const auto& [box, ct] : boundary_boxes(mp, v.charge(), BoxKind::addable))
      contents.insert(ct);
  return contents;
}

}  // namespace

std::set<Character> jm_cellular_characters(int n, const Charge& s) {
  std::set<FockVector> level;
  level.insert(FockVector::vacuum(s));
  for (int step = 0; step < n; ++step) {
    std::set<FockVector> next;
    for (const FockVector& v : level)
      for (int i : active_contents(v)) next.insert(apply_generator(Gen::F, i, v));
    level = std::move(next);
  }
  std::set<Character> out;
  for (const FockVector& v : level) out.insert(evaluate_at_one(v));
  return out;
}

namespace {

// Truncated induction at q = 1: add one content-xi box to every constituent.
Character truncated_induction(const Character& chi, int xi, const Charge& s) {
  Character out;
  out.level = chi.level;
  out.rank = chi.rank + 1;
  for (const auto& [mp, k] : chi.multiplicities)
    for (const auto& [box, ct] : boundary_boxes(mp, s, BoxKind::addable)) {
      if (ct != xi) continue;
      out.multiplicities[add_box(mp, box)] += k;
    }
  return out;
}

}  // namespace

std::set<Character> jm_cellular_characters_recursive(int n, const Charge& s) {
  std::set<Character> level;
  Character triv;
  triv.level = s.level();
  triv.rank = 0;
  triv.multiplicities.emplace(Multipartition::empty(s.level()), Int(1));
  level.insert(triv);
  for (int step = 0; step < n; ++step) {
    std::set<Character> next;
    for (const Character& chi : level) {
      std::set<int> contents;
      for (const auto& [mp, k] : chi.multiplicities)
        for (const auto& [box, ct] : boundary_boxes(mp, s, BoxKind::addable))
          contents.insert(ct);
      for (int xi : contents) {
        Character ind = truncated_induction(chi, xi, s);
        if (!ind.multiplicities.empty()) next.insert(std::move(ind));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::set<Character> constructible_characters(int n, const Charge& s) {
  if (s.level() != 2)
    fail(ErrorCode::BadInput, "constructible characters are a level-2 notion");
  std::set<Character> out;
  for (const auto& [mp, g] : canonical_basis(n, s)) out.insert(evaluate_at_one(g));
  return out;
}

// ---- exact cyclotomic arithmetic in Q[x]/(Phi_l) ----

namespace {

// Integer coefficients of Phi_l, low degree first, computed by dividing
// x^l - 1 by the cyclotomic polynomials of the proper divisors.
std::vector<Rational> cyclotomic_poly(int l) {
  std::vector<std::vector<Rational>> phi(l + 1);
  for (int d = 1; d <= l; ++d) {
    if (l % d != 0) continue;
    // numerator x^d - 1
    std::vector<Rational> num(d + 1, Rational(0));
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      const auto& div = phi[e];
      // exact polynomial long division
      std::vector<Rational> quot(num.size() - div.size() + 1, Rational(0));
      std::vector<Rational> rem = num;
      for (int i = (int)quot.size() - 1; i >= 0; --i) {
        Rational c = rem[i + div.size() - 1] / div.back();
        quot[i] = c;
        for (size_t j = 0; j < div.size(); ++j) rem[i + j] -= c * div[j];
      }
      num = quot;
    }
    phi[d] = num;
  }
  return phi[l];
}

struct Cyclotomic {
  // Coefficients in the power basis 1, z, ..., z^{deg-1} modulo Phi_l.
  std::vector<Rational> coords;
};

struct CycloField {
  int l;
  std::vector<Rational> phi;  // monic, degree phi(l)
  int deg;

  explicit CycloField(int order) : l(order), phi(cyclotomic_poly(order)) {
    deg = (int)phi.size() - 1;
  }

  Cyclotomic zero() const { return {std::vector<Rational>(deg, Rational(0))}; }

  // z^t reduced modulo Phi_l (t taken modulo l).
  Cyclotomic zeta_power(long t) const {
    t %= l;
    if (t < 0) t += l;
    std::vector<Rational> raw(t + 1, Rational(0));
    raw[t] = 1;
    return reduce(raw);
  }

  Cyclotomic reduce(std::vector<Rational> raw) const {
    for (int i = (int)raw.size() - 1; i >= deg; --i) {
      Rational c = raw[i];
      if (c == 0) continue;
      raw[i] = 0;
      for (int j = 0; j < deg; ++j) raw[i - deg + j] -= c * phi[j];
    }
    raw.resize(deg, Rational(0));
    return {raw};
  }

  void add_scaled(Cyclotomic& a, const Cyclotomic& b, const Rational& c) const {
    for (int i = 0; i < deg; ++i) a.coords[i] += c * b.coords[i];
  }

  // The value as a rational number, when the element is rational.
  bool as_rational(const Cyclotomic& a, Rational& out) const {
    for (int i = 1; i < deg; ++i)
      if (a.coords[i] != 0) return false;
    out = a.coords[0];
    return true;
  }
};

bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace

Charge params_to_charge(const CherednikParams& p) {
  int l = (int)p.c.size();
  if (l < 1) fail(ErrorCode::BadInput, "empty parameter list");
  if (p.c[0] != Rational(-1) / l)
    fail(ErrorCode::HypothesisViolated, "c_0 must equal -1/l");
  CycloField field(l);
  std::vector<int> kprime(l, 0);
  for (int c = 1; c <= l; ++c) {
    int i = ((1 - c) % l + l) % l;
    // l k_i = sum_{j=1}^{l-1} c_j zeta^{j(1-i)}
    Cyclotomic acc = field.zero();
    for (int j = 1; j < l; ++j)
      field.add_scaled(acc, field.zeta_power((long)j * (1 - i)), p.c[j]);
    Rational value;
    if (!field.as_rational(acc, value))
      fail(ErrorCode::HypothesisViolated,
           "l*k_" + std::to_string(i) + " is not rational");
    Rational diff = value - p.k;
    if (!is_integer(diff))
      fail(ErrorCode::HypothesisViolated,
           "l*k_" + std::to_string(i) + " - k is not an integer");
    kprime[c - 1] = (int)boost::multiprecision::numerator(diff);
  }
  return Charge(kprime, ChargeFlavor::general);
}

CherednikParams charge_to_params(const Charge& kprime) {
  int l = kprime.level();
  // k = -(sum k')/l restores sum k_i = 0; then l k_{1-c} = k'_c + k and
  // c_j = sum_t k_{1-t} zeta^{-jt}.
  Rational total = 0;
  for (int c = 1; c <= l; ++c) total += kprime.at(c);
  Rational k = -total / l;
  CycloField field(l);
  CherednikParams out;
  out.k = k;
  out.c.assign(l, Rational(0));
  out.c[0] = Rational(-1) / l;
  for (int j = 1; j < l; ++j) {
    Cyclotomic acc = field.zero();
    for (int t = 0; t < l; ++t) {
      // l k_{1-t} = k'_c + k where (1-c) == (1-t) mod l, i.e. c == t with
      // t == 0 meaning c == l.
      int c = t == 0 ? l : t;
      Rational lk = Rational(kprime.at(c)) + k;
      field.add_scaled(acc, field.zeta_power(-(long)j * t), lk / l);
    }
    Rational value;
    if (!field.as_rational(acc, value))
      fail(ErrorCode::HypothesisViolated,
           "charge has no rational parameter preimage");
    out.c[j] = value;
  }
  return out;
}

// ---- conjecture checkers ----

Int b_invariant_of(const Multipartition& mp, const Charge& s, int n) {
  int min_s = *std::min_element(s.s.begin(), s.s.end());
  int shift = std::max(0, n - min_s);
  std::vector<int> shifted(s.s);
  for (int& x : shifted) x += shift;
  return b_invariants(finite_symbol_of(mp, Charge(shifted, ChargeFlavor::decreasing))).b;
}

namespace {

// Minimal-b constituents of one vector's support; ties reported.
std::pair<Multipartition, std::vector<Multipartition>> min_b_support(
    const FockVector& g, const Charge& s, int n) {
  Multipartition best;
  Int best_b = 0;
  std::vector<Multipartition> ties;
  bool first = true;
  for (const auto& [mp, c] : g.terms()) {
    Int b = b_invariant_of(mp, s, n);
    if (first || b < best_b) {
      best = mp;
      best_b = b;
      ties.clear();
      first = false;
    } else if (b == best_b) {
      ties.push_back(mp);
    }
  }
  return {best, ties};
}

}  // namespace

std::vector<MinBEntry> check_min_b_constituent(const Charge& s, int n_max) {
  std::vector<MinBEntry> out;
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& [lambda, g] : canonical_basis(n, s)) {
      MinBEntry entry;
      entry.lambda = lambda;
      auto [best, ties] = min_b_support(g, s, n);
      entry.minimizer = best;
      entry.ties = ties;
      entry.pass = ties.empty();
      out.push_back(std::move(entry));
    }
  }
  return out;
}

std::vector<MLambdaEntry> check_m_lambda_family(const Charge& s, int n_max) {
  std::vector<MLambdaEntry> out;
  for (int n = 0; n <= n_max; ++n) {
    int min_s = *std::min_element(s.s.begin(), s.s.end());
    int shift = std::max(0, n - min_s);
    std::vector<int> shifted(s.s);
    for (int& x : shifted) x += shift;
    Charge norm(shifted, ChargeFlavor::decreasing);
    for (const auto& [lambda, g] : canonical_basis(n, s)) {
      MLambdaEntry entry;
      entry.lambda = lambda;
      auto [best, ties] = min_b_support(g, s, n);
      entry.minimizer = best;
      entry.family_minimal =
          partition_of(minimal_symbol(family_key(finite_symbol_of(lambda, norm))));
      entry.pass = ties.empty() && entry.minimizer == entry.family_minimal;
      out.push_back(std::move(entry));
    }
  }
  return out;
}

std::vector<MonomialityEntry> check_canonical_monomial_l2(const Charge& s,
                                                          int n_max,
                                                          long budget) {
  if (s.level() != 2 || s.at(1) <= s.at(2))
    fail(ErrorCode::BadInput, "needs a level-2 charge with s1 > s2");
  std::vector<MonomialityEntry> out;
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& [lambda, g] : canonical_basis(n, s)) {
      MonomialityEntry entry;
      entry.lambda = lambda;
      MonomialSearch search = is_monomial_vector(g, budget, /*quasi=*/true);
      entry.answer = search.answer;
      entry.witness = search.witness;
      entry.nodes = search.nodes;
      entry.pass = search.answer == MonomialAnswer::yes;
      out.push_back(std::move(entry));
    }
  }
  return out;
}

MonomialityEntry check_l5_counterexample(long budget) {
  Charge s({3, 2, 2, 1, 0}, ChargeFlavor::decreasing);
  // Component order normalized so the symbol rows increase down the columns.
  Multipartition lambda(std::vector<Partition>{
      Partition(), Partition(), Partition({1}), Partition({3}), Partition({3})});
  auto basis = canonical_basis(lambda.rank(), s);
  auto it = basis.find(lambda);
  if (it == basis.end())
    fail(ErrorCode::NotCanonicalIndex, "counterexample index not in the basis");
  MonomialityEntry entry;
  entry.lambda = lambda;
  MonomialSearch search = is_monomial_vector(it->second, budget, /*quasi=*/false);
  entry.answer = search.answer;
  entry.witness = search.witness;
  entry.nodes = search.nodes;
  entry.pass = search.answer == MonomialAnswer::no;
  return entry;
}

}  // namespace cmfock
