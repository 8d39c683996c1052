#include "cmfock/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cmfock {

LaurentPoly FockVector::coeff(const Multipartition& mp) const {
  auto it = terms_.find(mp);
  return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

void FockVector::add_term(const Multipartition& mp, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (mp.level() != charge_.level())
    fail(ErrorCode::ShapeMismatch, "term level differs from the charge level");
  if (mp.rank() != rank_)
    fail(ErrorCode::ShapeMismatch, "term rank differs from the vector rank");
  auto it = terms_.find(mp);
  if (it == terms_.end()) {
    terms_.emplace(mp, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r = *this;
  for (const auto& [mp, c] : o.terms_) r.add_term(mp, c);
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector r = *this;
  for (const auto& [mp, c] : o.terms_) r.add_term(mp, -c);
  return r;
}

FockVector FockVector::scaled(const LaurentPoly& p) const {
  FockVector r(charge_, rank_);
  if (p.is_zero()) return r;
  for (const auto& [mp, c] : terms_) r.terms_.emplace(mp, c * p);
  return r;
}

bool FockVector::operator<(const FockVector& o) const {
  if (charge_.s != o.charge_.s) return charge_.s < o.charge_.s;
  if (rank_ != o.rank_) return rank_ < o.rank_;
  return terms_ < o.terms_;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mp, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")" << mp.str();
  }
  return os.str();
}

FockVector apply_generator(Gen g, int i, const FockVector& v) {
  const Charge& s = v.charge();
  int delta = g == Gen::F ? 1 : (g == Gen::E ? -1 : 0);
  FockVector out(s, v.rank() + delta);
  for (const auto& [lambda, c] : v.terms()) {
    if (g == Gen::K) {
      out.add_term(lambda,
                   c * LaurentPoly::q_power(weight_statistic(lambda, i, s)));
      continue;
    }
    auto addable = boundary_boxes(lambda, s, BoxKind::addable);
    auto removable = boundary_boxes(lambda, s, BoxKind::removable);
    if (g == Gen::F) {
      for (const auto& [box, ct] : addable) {
        if (ct != i) continue;
        int n_succ = 0;
        for (const auto& [b2, ct2] : addable)
          if (ct2 == i && b2.comp > box.comp) ++n_succ;
        for (const auto& [b2, ct2] : removable)
          if (ct2 == i && b2.comp > box.comp) --n_succ;
        out.add_term(add_box(lambda, box), c * LaurentPoly::q_power(n_succ));
      }
    } else {
      for (const auto& [box, ct] : removable) {
        if (ct != i) continue;
        Multipartition mu = remove_box(lambda, box);
        // Counts taken on the smaller diagram, components before the box.
        int n_prec = 0;
        for (const auto& [b2, ct2] : boundary_boxes(mu, s, BoxKind::addable))
          if (ct2 == i && b2.comp < box.comp) ++n_prec;
        for (const auto& [b2, ct2] : boundary_boxes(mu, s, BoxKind::removable))
          if (ct2 == i && b2.comp < box.comp) --n_prec;
        out.add_term(mu, c * LaurentPoly::q_power(-n_prec));
      }
    }
  }
  return out;
}

FockVector apply_divided_F(int i, int r, const FockVector& v) {
  if (r <= 0) fail(ErrorCode::BadInput, "divided power needs r >= 1");
  FockVector w = v;
  for (int k = 0; k < r; ++k) w = apply_generator(Gen::F, i, w);
  LaurentPoly fact = quantum_factorial(r);
  FockVector out(v.charge(), v.rank() + r);
  for (const auto& [mp, c] : w.terms())
    out.add_term(mp, LaurentPoly::exact_divide(c, fact));
  return out;
}

namespace {

// K_i-weight of one beta-row: +1 with a movable bead at i, -1 with a hole at
// i below a bead at i+1, 0 otherwise.
int kappa(const Symbol& S, int c, int i) {
  bool at_i = S.has_bead(c, i);
  bool at_i1 = S.has_bead(c, i + 1);
  if (at_i && !at_i1) return 1;
  if (!at_i && at_i1) return -1;
  return 0;
}

int oracle_truncation(const FockVector& v, int i) {
  int m = v.rank() + 2;
  m = std::max(m, 2 - i + 1);
  for (int c = 1; c <= v.charge().level(); ++c)
    m = std::max(m, v.rank() + 2 - v.charge().at(c));
  return m;
}

}  // namespace

FockVector tensor_oracle_apply(Gen g, int i, const FockVector& v) {
  const Charge& s = v.charge();
  int l = s.level();
  int delta = g == Gen::F ? 1 : (g == Gen::E ? -1 : 0);
  int m = oracle_truncation(v, i);
  FockVector out(s, v.rank() + delta);
  for (const auto& [lambda, c] : v.terms()) {
    Symbol S = symbol_of(lambda, s, m);
    if (g == Gen::K) {
      int w = 0;
      for (int c2 = 1; c2 <= l; ++c2) w += kappa(S, c2, i);
      out.add_term(lambda, c * LaurentPoly::q_power(w));
      continue;
    }
    for (int c1 = 1; c1 <= l; ++c1) {
      int from = g == Gen::F ? i : i + 1;
      int to = g == Gen::F ? i + 1 : i;
      if (!S.has_bead(c1, from) || S.has_bead(c1, to)) continue;
      int w = 0;
      if (g == Gen::F) {
        for (int c2 = c1 + 1; c2 <= l; ++c2) w += kappa(S, c2, i);
      } else {
        for (int c2 = 1; c2 < c1; ++c2) w -= kappa(S, c2, i);
      }
      std::vector<std::vector<int>> rows = S.rows();
      auto& row = rows[c1 - 1];
      auto it = std::lower_bound(row.begin(), row.end(), from);
      if (it == row.end() || *it != from)
        fail(ErrorCode::ShapeMismatch, "bead to move is outside the stored window");
      *it = to;
      std::sort(row.begin(), row.end());
      Symbol moved(s, m, SymbolFlavor::semi_infinite, rows);
      out.add_term(partition_of(moved), c * LaurentPoly::q_power(w));
    }
  }
  return out;
}

FockVector monomial_vector(const MonomialWord& word, const Charge& s) {
  FockVector v = FockVector::vacuum(s);
  for (const Letter& letter : word)
    v = apply_divided_F(letter.content, letter.power, v);
  return v;
}

namespace {

int key_truncation(int n, const Charge& s) {
  int min_s = *std::min_element(s.s.begin(), s.s.end());
  return n + 1 + std::max(0, -min_s);
}

}  // namespace

bool is_canonical_index(const Multipartition& mp, const Charge& s) {
  return is_costandard(symbol_of(mp, s, key_truncation(mp.rank(), s)));
}

std::vector<Multipartition> canonical_keys(int n, const Charge& s) {
  if (!s.is_decreasing())
    fail(ErrorCode::FlavorMismatch, "canonical keys require a decreasing charge");
  std::vector<Multipartition> keys;
  for (const auto& mp : all_multipartitions(s.level(), n))
    if (is_canonical_index(mp, s)) keys.push_back(mp);
  return keys;
}

MonomialWord schedule_for(const Multipartition& mp, const Charge& s, int m) {
  Symbol S = symbol_of(mp, s, m);
  if (!is_costandard(S))
    fail(ErrorCode::NotCanonicalIndex,
         mp.str() + " does not index the canonical basis at this charge");
  MonomialWord word;
  int width = S.level() ? S.stored_length(1) : 0;
  for (int j = width; j >= 1; --j) {
    int r = 0;
    while (r < S.level() && S.stored_length(r + 1) >= j) ++r;
    int p = S.first_position(1) + (j - 1);
    int max_target = p;
    for (int c = 1; c <= r; ++c) max_target = std::max(max_target, S.row(c)[j - 1]);
    for (int v = p; v < max_target; ++v) {
      int count = 0;
      for (int c = 1; c <= r; ++c)
        if (S.row(c)[j - 1] > v) ++count;
      if (count > 0) word.push_back({v, count});
    }
  }
  return word;
}

std::pair<Int, std::vector<int>> elimination_key(const Multipartition& mp,
                                                 const Charge& s, int n) {
  int min_s = *std::min_element(s.s.begin(), s.s.end());
  int shift = std::max(0, n - min_s);
  std::vector<int> shifted(s.s);
  for (int& x : shifted) x += shift;
  Symbol S = finite_symbol_of(mp, Charge(shifted, ChargeFlavor::decreasing));
  return {b_invariants(S).b_prime, z_sequence(S)};
}

namespace {

// c0 + sum_{k>0} c_{-k} (q^k + q^{-k}): the bar-symmetric polynomial matching
// the nonpositive part of c, so that c - p lies in q.Z[q].
LaurentPoly bar_completion(const LaurentPoly& c) {
  LaurentPoly p;
  for (const auto& [e, coeff] : c.terms()) {
    if (e > 0) continue;
    if (e == 0)
      p += LaurentPoly::constant(coeff);
    else
      p += (LaurentPoly::q_power(e) + LaurentPoly::q_power(-e)).scalar_mul(coeff);
  }
  return p;
}

struct CanonicalContext {
  Charge s;
  int n;
  int m;
  EliminationOrder order;
  std::map<Multipartition, std::pair<Int, std::vector<int>>> keys;  // order keys
  std::map<Multipartition, FockVector> done;
  std::set<Multipartition> in_progress;

  // later(a, b): a strictly after b in the elimination order.
  bool later(const Multipartition& a, const Multipartition& b) const {
    const auto& ka = keys.at(a);
    const auto& kb = keys.at(b);
    if (ka != kb) {
      if (order == EliminationOrder::standard) return kb < ka;
      // Perturbed: reverse the z tie-break, keep b' (any valid total order
      // refining nothing in particular; output must not change).
      if (ka.first != kb.first) return kb.first < ka.first;
      return ka.second < kb.second;
    }
    return b < a;
  }

  const FockVector& compute(const Multipartition& lambda) {
    auto hit = done.find(lambda);
    if (hit != done.end()) return hit->second;
    if (in_progress.count(lambda))
      fail(ErrorCode::TriangularityFailure,
           "elimination cycle through " + lambda.str());
    in_progress.insert(lambda);

    FockVector g = monomial_vector(schedule_for(lambda, s, m), s);
    if (!(g.coeff(lambda) == LaurentPoly::one()))
      fail(ErrorCode::ScheduleFailure,
           "leading coefficient of " + lambda.str() + " is " +
               g.coeff(lambda).str());

    for (int iter = 0;; ++iter) {
      if (iter > 1000)
        fail(ErrorCode::TriangularityFailure,
             "correction loop did not settle at " + lambda.str());
      // Most negative dirty key coefficient first; ties resolved by the
      // order.  Dirty non-key coefficients are transient: they must vanish
      // once every key is clean, which the final sweep asserts.
      const Multipartition* pick = nullptr;
      long pick_exp = 1;
      for (const auto& [mu, cmu] : g.terms()) {
        if (mu == lambda || cmu.in_qZq() || !keys.count(mu)) continue;
        long e = cmu.min_exponent();  // <= 0 here
        if (pick == nullptr || e < pick_exp ||
            (e == pick_exp && later(mu, *pick))) {
          pick = &mu;
          pick_exp = e;
        }
      }
      if (pick == nullptr) break;
      Multipartition mu = *pick;
      LaurentPoly p = bar_completion(g.coeff(mu));
      const FockVector& gmu = compute(mu);
      g = g - gmu.scaled(p);
    }

    if (!(g.coeff(lambda) == LaurentPoly::one()))
      fail(ErrorCode::TriangularityFailure,
           "leading coefficient drifted at " + lambda.str());
    for (const auto& [mu, cmu] : g.terms())
      if (mu != lambda && !cmu.in_qZq())
        fail(ErrorCode::TriangularityFailure,
             "residual coefficient outside q.Z[q] at " + mu.str());

    in_progress.erase(lambda);
    return done.emplace(lambda, std::move(g)).first->second;
  }
};

}  // namespace

std::map<Multipartition, FockVector> canonical_basis(int n, const Charge& s,
                                                     EliminationOrder order) {
  if (!s.is_decreasing())
    fail(ErrorCode::FlavorMismatch, "canonical basis requires a decreasing charge");
  CanonicalContext ctx;
  ctx.s = Charge(s.s, ChargeFlavor::decreasing);
  ctx.n = n;
  ctx.m = key_truncation(n, s);
  ctx.order = order;
  for (const auto& mp : canonical_keys(n, ctx.s))
    ctx.keys.emplace(mp, elimination_key(mp, ctx.s, n));
  for (const auto& [mp, key] : ctx.keys) ctx.compute(mp);
  return std::move(ctx.done);
}

namespace {

std::map<int, int> content_multiset(const Multipartition& mp, const Charge& s) {
  std::map<int, int> counts;
  for (int c = 1; c <= mp.level(); ++c) {
    const Partition& part = mp.component(c);
    for (int a = 1; a <= part.length(); ++a)
      for (int b = 1; b <= part.part(a); ++b)
        counts[b - a + s.at(c)] += 1;
  }
  return counts;
}

}  // namespace

MonomialSearch is_monomial_vector(const FockVector& v, long budget,
                                  bool quasimonomial_only) {
  MonomialSearch res;
  if (v.is_zero()) return res;  // only nonzero vectors qualify
  const Charge& s = v.charge();
  if (v == FockVector::vacuum(s)) {
    res.answer = MonomialAnswer::yes;
    return res;
  }
  auto counts = content_multiset(v.terms().begin()->first, s);
  for (const auto& [mp, c] : v.terms())
    if (content_multiset(mp, s) != counts) return res;  // mixed weight: no

  MonomialWord word;
  bool exceeded = false;
  int l = s.level();

  std::function<bool(const FockVector&)> dfs = [&](const FockVector& prefix) {
    bool done = true;
    for (const auto& [ct, k] : counts)
      if (k > 0) done = false;
    if (done) return prefix == v;
    for (auto& [ct, k] : counts) {
      if (k == 0) continue;
      if (!word.empty() && word.back().content == ct && !quasimonomial_only)
        continue;  // equal neighbours merge into one divided power
      int max_r = quasimonomial_only ? 1 : std::min(k, l);
      for (int r = 1; r <= max_r; ++r) {
        if (++res.nodes > budget) {
          exceeded = true;
          return false;
        }
        FockVector next = apply_divided_F(ct, r, prefix);
        if (next.is_zero()) continue;
        word.push_back({ct, r});
        k -= r;
        bool found = dfs(next);
        k += r;
        if (found) return true;
        word.pop_back();
        if (exceeded) return false;
      }
    }
    return false;
  };

  if (dfs(FockVector::vacuum(s))) {
    res.answer = MonomialAnswer::yes;
    res.witness = word;
  } else if (exceeded) {
    res.answer = MonomialAnswer::budget_exceeded;
  }
  return res;
}

FockVector expand_simple(const Symbol& S) {
  Multipartition base = partition_of(S);
  FockVector out(S.charge(), base.rank());
  for (const AdmissibleSigma& sigma : admissible_sigmas(S)) {
    Multipartition mp = partition_of(sigma.permuted);
    if (!out.coeff(mp).is_zero())
      fail(ErrorCode::NotSimple,
           "two admissible elements hit the same multipartition");
    out.add_term(mp, LaurentPoly::q_power(sigma.length - sigma.m_stat));
  }
  return out;
}

FockVector expand_simple(const Multipartition& mp, const Charge& s, int m) {
  return expand_simple(symbol_of(mp, s, m));
}

}  // namespace cmfock
