#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cmfock/laurent.hpp"
#include "cmfock/symbols.hpp"

namespace cmfock {

// Sparse vector of the level-l charged Fock module: a finite sum of standard
// basis vectors |lambda, s> of a fixed rank with Laurent coefficients.  The
// zero vector keeps its rank tag.
class FockVector {
 public:
  FockVector() = default;
  FockVector(Charge charge, int rank) : charge_(std::move(charge)), rank_(rank) {}

  static FockVector vacuum(const Charge& s) {
    FockVector v(s, 0);
    v.add_term(Multipartition::empty(s.level()), LaurentPoly::one());
    return v;
  }
  static FockVector basis_vector(const Charge& s, const Multipartition& mp) {
    FockVector v(s, mp.rank());
    v.add_term(mp, LaurentPoly::one());
    return v;
  }

  const Charge& charge() const { return charge_; }
  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Multipartition, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const Multipartition& mp) const;

  void add_term(const Multipartition& mp, const LaurentPoly& c);

  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector scaled(const LaurentPoly& p) const;

  bool operator==(const FockVector& o) const {
    return charge_ == o.charge_ && rank_ == o.rank_ && terms_ == o.terms_;
  }
  bool operator!=(const FockVector& o) const { return !(*this == o); }
  bool operator<(const FockVector& o) const;

  std::string str() const;

 private:
  Charge charge_;
  int rank_ = 0;
  std::map<Multipartition, LaurentPoly> terms_;
};

enum class Gen { E, F, K };

// Chevalley action on box diagrams: F_i adds a content-i box with weight
// q^{N_i^succ}, E_i removes one with q^{-N_i^prec}, K_i scales by q^{N_i}.
FockVector apply_generator(Gen g, int i, const FockVector& v);

// F_i^{(r)} = F_i^r / [r]!; exact by integrability.
FockVector apply_divided_F(int i, int r, const FockVector& v);

// The same action computed through the beta-sequence tensor factors with
// coproduct weights; an independent implementation used as an oracle.
FockVector tensor_oracle_apply(Gen g, int i, const FockVector& v);

struct Letter {
  int content = 0;
  int power = 1;
  bool operator==(const Letter& o) const {
    return content == o.content && power == o.power;
  }
};
// Applied first letter first.
using MonomialWord = std::vector<Letter>;

FockVector monomial_vector(const MonomialWord& word, const Charge& s);

// Index test for the canonical basis of the highest-weight submodule:
// the symbol columns weakly increase down the rows.
bool is_canonical_index(const Multipartition& mp, const Charge& s);
std::vector<Multipartition> canonical_keys(int n, const Charge& s);

// Divided-power word whose monomial vector has coefficient exactly 1 on
// |lambda, s>: stored symbol columns processed rightmost first, each column
// climbing all its beads in lockstep.  Throws NotCanonicalIndex /
// ScheduleFailure.
MonomialWord schedule_for(const Multipartition& mp, const Charge& s, int m);

enum class EliminationOrder { standard, perturbed };

// The bar-invariant basis with G(lambda) = |lambda> mod q.Z[q]: start from
// the schedule's monomial vector, then repeatedly subtract bar-symmetric
// multiples of already-computed basis vectors until every non-leading key
// coefficient lies in q.Z[q].  The output does not depend on the order
// (tested, not assumed).
std::map<Multipartition, FockVector> canonical_basis(
    int n, const Charge& s, EliminationOrder order = EliminationOrder::standard);

// Elimination-order key: (b' of the finite symbol at charge s + T, z-sequence)
// with T = max(0, n - min_c s_c).
std::pair<Int, std::vector<int>> elimination_key(const Multipartition& mp,
                                                 const Charge& s, int n);

enum class MonomialAnswer { yes, no, budget_exceeded };

struct MonomialSearch {
  MonomialAnswer answer = MonomialAnswer::no;
  MonomialWord witness;  // filled on yes
  long nodes = 0;        // applications performed
};

// Exhaustive search for a (quasi)monomial word equal to v over the words
// whose expanded content multiset matches the common box-content multiset of
// v's support.
MonomialSearch is_monomial_vector(const FockVector& v, long budget,
                                  bool quasimonomial_only = false);

// Closed-form expansion of the monomial vector attached to a simple symbol:
// one term q^{l(sigma) - M} |lambda^sigma> per admissible sigma.
FockVector expand_simple(const Symbol& S);
FockVector expand_simple(const Multipartition& mp, const Charge& s, int m);

}  // namespace cmfock
