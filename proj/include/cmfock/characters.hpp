#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <set>

#include "cmfock/fock.hpp"

namespace cmfock {

using Rational = boost::multiprecision::cpp_rational;

// A character written in the irreducible basis indexed by multipartitions;
// all stored multiplicities are positive.
struct Character {
  int level = 0;
  int rank = 0;
  std::map<Multipartition, Int> multiplicities;

  bool operator==(const Character& o) const {
    return level == o.level && rank == o.rank &&
           multiplicities == o.multiplicities;
  }
  bool operator<(const Character& o) const;
  std::string str() const;
};

// q = 1 specialization.  Throws NegativeMultiplicity when some coefficient
// sum is negative.
Character evaluate_at_one(const FockVector& v);

// Characters of all rank-n vectors built from the vacuum by plain F_i's,
// via breadth-first search over the vectors themselves.
std::set<Character> jm_cellular_characters(int n, const Charge& s);

// The same set built by the recursive content-truncated induction on
// characters, never forming a q-coefficient.
std::set<Character> jm_cellular_characters_recursive(int n, const Charge& s);

// q = 1 shadows of the canonical basis (level 2, s1 >= s2).
std::set<Character> constructible_characters(int n, const Charge& s);

// Reflection-type parameters: c_0..c_{l-1} plus the shift k, subject to
// c_0 = -1/l and l k_i in Z + k where k_i = (1/l) sum_{j>=1} zeta^{j(1-i)} c_j.
struct CherednikParams {
  std::vector<Rational> c;
  Rational k;
};

// The integer charge k' with k'_c = l k_{1-c} - k (indices of k mod l),
// computed exactly in Q[x]/(Phi_l).  Throws HypothesisViolated.
Charge params_to_charge(const CherednikParams& p);

// A rational preimage when one exists (always for l <= 2); throws
// HypothesisViolated when the linear system has no rational solution.
CherednikParams charge_to_params(const Charge& kprime);

// ---- conjecture checkers ----

// b-invariant of one multipartition at the charge normalization shared by a
// whole support: the finite symbol at charge s + max(0, n - min s).
Int b_invariant_of(const Multipartition& mp, const Charge& s, int n);

struct MinBEntry {
  Multipartition lambda;           // canonical-basis key
  Multipartition minimizer;        // constituent of minimal b
  std::vector<Multipartition> ties;  // nonempty means failure
  bool pass = false;
};

// Unique minimal-b constituent of every G(lambda, s) of rank <= n_max.
std::vector<MinBEntry> check_min_b_constituent(const Charge& s, int n_max);

struct MLambdaEntry {
  Multipartition lambda;
  Multipartition minimizer;      // m(lambda)
  Multipartition family_minimal; // partition of the family's minimal symbol
  bool pass = false;
};

// m(lambda) against the greedy minimal symbol of lambda's family.
std::vector<MLambdaEntry> check_m_lambda_family(const Charge& s, int n_max);

struct MonomialityEntry {
  Multipartition lambda;
  MonomialAnswer answer = MonomialAnswer::no;
  MonomialWord witness;
  long nodes = 0;
  bool pass = false;
};

// Every canonical vector at level 2, s1 > s2, matched by a quasimonomial
// word.
std::vector<MonomialityEntry> check_canonical_monomial_l2(const Charge& s,
                                                          int n_max,
                                                          long budget);

// The level-5 counterexample: the canonical vector exists and no monomial
// word reproduces it within the bounded word space.
MonomialityEntry check_l5_counterexample(long budget);

}  // namespace cmfock
