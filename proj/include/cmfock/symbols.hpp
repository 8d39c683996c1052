#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmfock/bigint.hpp"
#include "cmfock/combinat.hpp"

namespace cmfock {

// Charged beta-sequence tables, one increasing row per component, row 1 on
// top.  Two flavors share the storage layout (vector of increasing rows) but
// differ in how positions are labelled:
//
//   semi_infinite: row c covers positions 1-m .. s_c (s_c+m stored entries,
//     none when s_c+m <= 0).  Below storage the symbol continues with the
//     frozen value p at position p.  Part extraction: the part indexed
//     s_c-p+1 equals value(p) - p.
//
//   finite: row c has exactly s_c entries at positions 1 .. s_c, all
//     nonnegative, truncation 0.  Part extraction: the part indexed
//     s_c-j+1 equals entry(j) - (j-1).
//
// Column structure used by the simple/admissible operations: stored columns,
// i.e. equal storage index across rows (all rows start at the same
// position).  The z-reading instead right-aligns rows: global column g holds
// position g - s_1 + s_i of row i.
enum class SymbolFlavor { semi_infinite, finite };

class Symbol {
 public:
  Symbol() = default;
  Symbol(Charge charge, int m, SymbolFlavor flavor,
         std::vector<std::vector<int>> rows);

  const Charge& charge() const { return charge_; }
  int level() const { return charge_.level(); }
  int truncation() const { return m_; }
  SymbolFlavor flavor() const { return flavor_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& row(int c) const { return rows_[c - 1]; }

  int stored_length(int c) const { return (int)rows_[c - 1].size(); }
  // Position of the first stored entry of row c.
  int first_position(int /*c*/) const {
    return flavor_ == SymbolFlavor::finite ? 1 : 1 - m_;
  }
  // Entry at absolute position p; reads the frozen region for the
  // semi-infinite flavor.
  int value_at(int c, int p) const;
  // Bead-set membership of a value (semi-infinite flavor).
  bool has_bead(int c, int v) const;

  bool operator==(const Symbol& o) const {
    return charge_ == o.charge_ && m_ == o.m_ && flavor_ == o.flavor_ &&
           rows_ == o.rows_;
  }
  bool operator<(const Symbol& o) const;

  // Bracketed row lists, one row per line.
  std::string str() const;

 private:
  Charge charge_;
  int m_ = 0;
  SymbolFlavor flavor_ = SymbolFlavor::semi_infinite;
  std::vector<std::vector<int>> rows_;
};

// Multipartition -> symbol.  Throws TruncationTooSmall when a component has
// more parts than its row can store.
Symbol symbol_of(const Multipartition& mp, const Charge& s, int m);
Symbol finite_symbol_of(const Multipartition& mp, const Charge& s);

Multipartition partition_of(const Symbol& S);

// Equivalent flavor conversions (lossless on the represented multipartition).
Symbol to_finite(const Symbol& S);
Symbol to_semi_infinite(const Symbol& S, int m);

// Column weakly decreasing down the rows at equal positions; equivalent to
// cylindricity of partition_of(S).  Requires a weakly decreasing charge.
bool is_standard(const Symbol& S);

// The transposed condition: column weakly increasing down the rows.  This is
// the index test for the canonical basis of the highest-weight submodule.
bool is_costandard(const Symbol& S);

// Weakly increasing reading through stored columns, top to bottom within a
// column; the defining property of the symbol of a simple multipartition.
bool is_simple_symbol(const Symbol& S);

// ---- finite-flavor statistics ----

// Reading of the right-aligned display: global columns left to right, bottom
// row to top row within a column.
std::vector<int> z_sequence(const Symbol& S);

// z(W) for the weight table W with w_{ij} = l(s_i - j) + i - 1; strictly
// decreasing.
std::vector<int> weight_sequence(const Charge& s);

struct BInvariants {
  Int b;        // sum w_{ij} (beta_{ij} - j + 1)
  Int b_prime;  // sum w_{ij} beta_{ij} = z(W) . z(S)
};
BInvariants b_invariants(const Symbol& S);

// true iff every prefix sum of z(S) is <= the one of z(T).
bool dominance_leq(const Symbol& S, const Symbol& T);

// ---- families ----

struct FamilyKey {
  Charge charge;
  int m = 0;
  SymbolFlavor flavor = SymbolFlavor::finite;
  std::vector<int> entries;  // sorted multiset of all stored entries

  bool operator==(const FamilyKey& o) const {
    return charge == o.charge && m == o.m && flavor == o.flavor &&
           entries == o.entries;
  }
  bool operator<(const FamilyKey& o) const;
};

FamilyKey family_key(const Symbol& S);

// Every valid symbol with the key's shape and entry multiset, in
// lexicographic reading order (z-order for the finite flavor).  Throws
// BadInput when the family exceeds max_count.
std::vector<Symbol> enumerate_family(const FamilyKey& key,
                                     std::size_t max_count = 1u << 20);

// Greedy z-minimal member of the family; the unique b-minimizer.
Symbol minimal_symbol(const FamilyKey& key);

// The unique member whose stored-column reading is weakly increasing,
// obtained by sorting the multiset into the reading order.
Symbol simple_multipartition(const FamilyKey& key);

// ---- admissible permutations ----

struct AdmissibleSigma {
  Symbol permuted;
  // Per stored column: slot u (1-based, top-down) shows the entry of source
  // row col_perms[j][u-1]; identity left implicit for columns beyond the
  // vector.
  std::vector<std::vector<int>> col_perms;
  int length = 0;  // total inversion count
  int m_stat = 0;
};

// The double count of equal adjacent-column entries: for each column pair
// (j-1, j) and each entry of column j, the entries of column j-1 equal to it
// in rows strictly above.
int m_statistic(const Symbol& S);

// All admissible row rearrangements of a simple symbol: per-column
// permutations of stored entries leaving every row repetition-free, each of
// minimal length for its image.  Throws NotSimple when S is not simple or
// when two admissible images coincide.
std::vector<AdmissibleSigma> admissible_sigmas(const Symbol& S);

}  // namespace cmfock
