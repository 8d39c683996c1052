#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cmfock/fock.hpp"

using namespace cmfock;

namespace {

Multipartition mp(std::vector<std::vector<int>> parts) {
  std::vector<Partition> comps;
  for (auto& p : parts) comps.emplace_back(Partition(p));
  return Multipartition(comps);
}

FockVector basis(const Charge& s, std::vector<std::vector<int>> parts) {
  return FockVector::basis_vector(s, mp(parts));
}

}  // namespace

TEST_CASE("generator action") {
  Charge s00({0, 0});
  FockVector vac = FockVector::vacuum(s00);

  SUBCASE("E annihilates the vacuum") {
    for (int i = -2; i <= 2; ++i) {
      FockVector r = apply_generator(Gen::E, i, vac);
      CHECK(r.is_zero());
      CHECK(r.rank() == -1);  // the zero vector keeps its rank tag
    }
  }
  SUBCASE("F_0 on the vacuum at (0,0)") {
    FockVector r = apply_generator(Gen::F, 0, vac);
    FockVector expect(s00, 1);
    expect.add_term(mp({{1}, {}}), LaurentPoly::q_power(1));
    expect.add_term(mp({{}, {1}}), LaurentPoly::one());
    CHECK(r == expect);
  }
  SUBCASE("K is the content weight on the vacuum") {
    Charge s({1, 0, 1});
    FockVector v = FockVector::vacuum(s);
    CHECK(apply_generator(Gen::K, 1, v) == v.scaled(LaurentPoly::q_power(2)));
    CHECK(apply_generator(Gen::K, 0, v) == v.scaled(LaurentPoly::q_power(1)));
    CHECK(apply_generator(Gen::K, 7, v) == v);
  }
}

TEST_CASE("divided powers") {
  Charge s10({1, 0});
  SUBCASE("powers above the level annihilate") {
    for (int n = 0; n <= 2; ++n)
      for (const auto& lam : all_multipartitions(2, n)) {
        FockVector v = FockVector::basis_vector(s10, lam);
        for (int i = -2; i <= 3; ++i)
          CHECK(apply_divided_F(i, 3, v).is_zero());
      }
  }
  SUBCASE("first divided power is the generator") {
    std::mt19937 rng(5);
    for (int n = 0; n <= 3; ++n)
      for (const auto& lam : all_multipartitions(2, n)) {
        FockVector v = FockVector::basis_vector(s10, lam);
        for (int i = -1; i <= 2; ++i)
          CHECK(apply_divided_F(i, 1, v) == apply_generator(Gen::F, i, v));
      }
  }
  SUBCASE("F_0^(2) F_1 = F_0 F_1 F_0 on the vacuum at (1,0)") {
    FockVector lhs = monomial_vector({{1, 1}, {0, 2}}, s10);
    FockVector rhs = monomial_vector({{0, 1}, {1, 1}, {0, 1}}, s10);
    CHECK(lhs == rhs);
    CHECK_FALSE(lhs.is_zero());
  }
  SUBCASE("F_0^(2) annihilates the vacuum when s1 > s2") {
    CHECK(monomial_vector({{0, 2}}, s10).is_zero());
  }
}

TEST_CASE("monomial vectors") {
  Charge s10({1, 0});
  CHECK(monomial_vector({}, s10) == FockVector::vacuum(s10));

  SUBCASE("coefficients live in N[q,q^-1]") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> content(-2, 3), power(1, 2), len(0, 4);
    for (int t = 0; t < 40; ++t) {
      MonomialWord w;
      int k = len(rng);
      for (int j = 0; j < k; ++j) w.push_back({content(rng), power(rng)});
      FockVector v = monomial_vector(w, s10);
      for (const auto& [lam, c] : v.terms()) CHECK(c.nonneg_coeffs());
    }
  }
}

TEST_CASE("tensor oracle agrees with the direct action") {
  for (const Charge& s : {Charge({1, 0}), Charge({0, 0}), Charge({3, 1, 2})}) {
    int lo = *std::min_element(s.s.begin(), s.s.end()) - 3;
    int hi = *std::max_element(s.s.begin(), s.s.end()) + 3;
    for (int n = 0; n <= 2; ++n)
      for (const auto& lam : all_multipartitions(s.level(), n)) {
        FockVector v = FockVector::basis_vector(s, lam);
        for (int i = lo; i <= hi; ++i)
          for (Gen g : {Gen::E, Gen::F, Gen::K})
            CHECK(apply_generator(g, i, v) == tensor_oracle_apply(g, i, v));
      }
  }
}

TEST_CASE("schedule") {
  Charge s10({1, 0});
  SUBCASE("empty diagram gives the empty word") {
    CHECK(schedule_for(Multipartition::empty(2), s10, 3).empty());
  }
  SUBCASE("keys get unit leading coefficients") {
    for (const Charge& s : {Charge({1, 0}), Charge({0, 0}), Charge({2, 0}),
                            Charge({2, 1, 0})}) {
      for (int n = 0; n <= 4; ++n)
        for (const auto& lam : canonical_keys(n, s)) {
          FockVector a = monomial_vector(schedule_for(lam, s, n + 2), s);
          CHECK(a.coeff(lam) == LaurentPoly::one());
        }
    }
  }
  SUBCASE("the (1,0) word for ((1),(1)) exists") {
    FockVector a = monomial_vector(schedule_for(mp({{1}, {1}}), s10, 3), s10);
    FockVector expect(s10, 2);
    expect.add_term(mp({{1}, {1}}), LaurentPoly::one());
    expect.add_term(mp({{1, 1}, {}}), LaurentPoly::q_power(1));
    CHECK(a == expect);
  }
  SUBCASE("((1,1),-) at (1,0) indexes nothing") {
    CHECK_THROWS_AS(schedule_for(mp({{1, 1}, {}}), s10, 3), DomainError);
    // no divided word on contents {0,1} leads with that multipartition:
    CHECK(monomial_vector({{0, 1}, {1, 1}}, s10).coeff(mp({{1, 1}, {}})) ==
          LaurentPoly::zero());
    CHECK(monomial_vector({{1, 1}, {0, 1}}, s10).coeff(mp({{1, 1}, {}})) ==
          LaurentPoly::q_power(1));
  }
}

TEST_CASE("canonical basis") {
  Charge s10({1, 0});
  SUBCASE("rank 1 vectors are pure") {
    auto basis1 = canonical_basis(1, s10);
    REQUIRE(basis1.size() == 2);
    CHECK(basis1.at(mp({{1}, {}})) == basis(s10, {{1}, {}}));
    CHECK(basis1.at(mp({{}, {1}})) == basis(s10, {{}, {1}}));
  }
  SUBCASE("rank 2 at (1,0)") {
    auto basis2 = canonical_basis(2, s10);
    REQUIRE(basis2.size() == 4);
    FockVector expect(s10, 2);
    expect.add_term(mp({{1}, {1}}), LaurentPoly::one());
    expect.add_term(mp({{1, 1}, {}}), LaurentPoly::q_power(1));
    CHECK(basis2.at(mp({{1}, {1}})) == expect);
    // every vector: unit leading term, tail in q.Z[q]
    for (const auto& [lam, g] : basis2) {
      CHECK(g.coeff(lam) == LaurentPoly::one());
      for (const auto& [mu, c] : g.terms())
        if (!(mu == lam)) CHECK(c.in_qZq());
    }
  }
  SUBCASE("perturbed elimination order changes nothing") {
    for (int n = 0; n <= 3; ++n)
      CHECK(canonical_basis(n, s10, EliminationOrder::standard) ==
            canonical_basis(n, s10, EliminationOrder::perturbed));
  }
  SUBCASE("elimination keys freeze the rank-2 order") {
    auto key = [&](std::vector<std::vector<int>> parts) {
      return elimination_key(mp(parts), s10, 2).first;
    };
    CHECK(key({{2}, {}}) == 3);
    CHECK(key({{1}, {1}}) == 4);
    CHECK(key({{1, 1}, {}}) == 5);
    CHECK(key({{}, {2}}) == 5);
    CHECK(key({{}, {1, 1}}) == 7);
  }
}

TEST_CASE("level 3 bases: straightening fires and stays order-independent") {
  // At level >= 3 many keys genuinely need correction terms; the output must
  // still be order-independent with unit leading terms and positive tails.
  for (const Charge& s : {Charge({2, 1, 0}), Charge({1, 1, 0})}) {
    for (int n = 0; n <= 6; ++n) {
      auto basis = canonical_basis(n, s);
      CHECK(basis == canonical_basis(n, s, EliminationOrder::perturbed));
      int corrected = 0;
      for (const auto& [lam, g] : basis) {
        CHECK(g.coeff(lam) == LaurentPoly::one());
        for (const auto& [muu, c] : g.terms()) {
          if (muu == lam) continue;
          CHECK(c.in_qZq());
          CHECK(c.nonneg_coeffs());
        }
        if (!(g == monomial_vector(schedule_for(lam, s, n + 2), s))) ++corrected;
      }
      if (n == 6) CHECK(corrected > 0);
    }
  }
}

TEST_CASE("level 1: canonical basis is the standard basis") {
  // With one row there is nothing to straighten: every partition indexes the
  // basis and every vector is pure.
  for (const Charge& s : {Charge({0}), Charge({2})}) {
    for (int n = 0; n <= 6; ++n) {
      auto basis = canonical_basis(n, s);
      auto mps = all_multipartitions(1, n);
      REQUIRE(basis.size() == mps.size());
      for (const auto& lam : mps)
        CHECK(basis.at(lam) == FockVector::basis_vector(s, lam));
    }
  }
}

TEST_CASE("equal-charge divided-square words collapse to pure vectors") {
  Charge s11({1, 1});
  // any nonzero product of divided squares applied to the vacuum is one
  // standard basis vector with equal rows and coefficient 1
  std::vector<MonomialWord> words = {{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<MonomialWord> next;
    for (const auto& w : words)
      for (int i = -2; i <= 4; ++i) {
        if (!w.empty() && w.back().content == i) continue;
        MonomialWord ext = w;
        ext.push_back({i, 2});
        next.push_back(ext);
      }
    for (const auto& w : next) {
      FockVector v = monomial_vector(w, s11);
      if (v.is_zero()) continue;
      REQUIRE(v.terms().size() == 1);
      const auto& [lam, c] = *v.terms().begin();
      CHECK(c == LaurentPoly::one());
      CHECK(lam.component(1) == lam.component(2));
    }
    words = next;
  }
}

TEST_CASE("monomiality search") {
  Charge s10({1, 0});
  SUBCASE("the vacuum is the empty word") {
    MonomialSearch r = is_monomial_vector(FockVector::vacuum(s10), 1000);
    CHECK(r.answer == MonomialAnswer::yes);
    CHECK(r.witness.empty());
  }
  SUBCASE("the rank-2 canonical vector has a witness") {
    FockVector g(s10, 2);
    g.add_term(mp({{1}, {1}}), LaurentPoly::one());
    g.add_term(mp({{1, 1}, {}}), LaurentPoly::q_power(1));
    MonomialSearch r = is_monomial_vector(g, 100000);
    REQUIRE(r.answer == MonomialAnswer::yes);
    CHECK(monomial_vector(r.witness, s10) == g);
  }
  SUBCASE("budget exhaustion is a result, not an error") {
    FockVector g(s10, 2);
    g.add_term(mp({{1}, {1}}), LaurentPoly::one());
    g.add_term(mp({{1, 1}, {}}), LaurentPoly::q_power(1));
    MonomialSearch r = is_monomial_vector(g, 1);
    CHECK(r.answer == MonomialAnswer::budget_exceeded);
  }
  SUBCASE("a fabricated non-monomial vector is rejected") {
    FockVector v(s10, 2);
    v.add_term(mp({{1}, {1}}), LaurentPoly::constant(7));
    MonomialSearch r = is_monomial_vector(v, 1000000);
    CHECK(r.answer == MonomialAnswer::no);
  }
}

TEST_CASE("simple expansions match the schedule route") {
  // The closed-form expansion and the divided-power word must produce the
  // same vector on every simple multipartition of small rank.
  for (const Charge& s : {Charge({1, 0}), Charge({2, 0}), Charge({1, 1}),
                          Charge({2, 1, 0}), Charge({1, 1, 0})}) {
    for (int n = 0; n <= 5; ++n) {
      if (s.level() == 3 && n > 4) continue;
      for (const auto& lam : canonical_keys(n, s)) {
        int m = n + 1;
        Symbol S = symbol_of(lam, s, m);
        if (!is_simple_symbol(S)) continue;
        CHECK(expand_simple(S) == monomial_vector(schedule_for(lam, s, m), s));
      }
    }
  }
}

TEST_CASE("expansion of the empty symbol") {
  Charge s({2, 1});
  FockVector v = expand_simple(Multipartition::empty(2), s, 1);
  CHECK(v == FockVector::vacuum(s));
}

TEST_CASE("expansions are stable under enlarging the truncation") {
  for (const Charge& s : {Charge({1, 0}), Charge({2, 1, 0})}) {
    for (int n = 0; n <= 4; ++n)
      for (const auto& lam : canonical_keys(n, s)) {
        if (!is_simple_symbol(symbol_of(lam, s, n + 1))) continue;
        CHECK(expand_simple(lam, s, n + 1) == expand_simple(lam, s, n + 2));
      }
  }
}
