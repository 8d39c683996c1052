#include "cmfock/symbols.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace cmfock {

namespace {

int expected_length(const Charge& s, int m, SymbolFlavor flavor, int c) {
  if (flavor == SymbolFlavor::finite) return s.at(c);
  return std::max(0, s.at(c) + m);
}

void require_finite_decreasing(const Symbol& S, const char* what) {
  if (S.flavor() != SymbolFlavor::finite)
    fail(ErrorCode::FlavorMismatch, std::string(what) + " requires the finite flavor");
  if (!S.charge().is_decreasing())
    fail(ErrorCode::FlavorMismatch, std::string(what) + " requires a decreasing charge");
}

}  // namespace

Symbol::Symbol(Charge charge, int m, SymbolFlavor flavor,
               std::vector<std::vector<int>> rows)
    : charge_(std::move(charge)), m_(m), flavor_(flavor), rows_(std::move(rows)) {
  if (flavor_ == SymbolFlavor::finite) m_ = 0;
  if ((int)rows_.size() != charge_.level())
    fail(ErrorCode::ShapeMismatch, "row count differs from charge level");
  if (m_ < 0) fail(ErrorCode::BadInput, "negative truncation");
  for (int c = 1; c <= level(); ++c) {
    if (flavor_ == SymbolFlavor::finite && charge_.at(c) < 0)
      fail(ErrorCode::FlavorMismatch, "finite flavor requires nonnegative charge");
    const auto& row = rows_[c - 1];
    if ((int)row.size() != expected_length(charge_, m_, flavor_, c))
      fail(ErrorCode::ShapeMismatch, "row length differs from charge+truncation");
    for (size_t i = 0; i + 1 < row.size(); ++i)
      if (row[i] >= row[i + 1])
        fail(ErrorCode::BadInput, "row entries must be strictly increasing");
    // finite entries are 0-based, stored semi-infinite entries sit at or
    // above their position
    int min_front = flavor_ == SymbolFlavor::finite ? 0 : first_position(c);
    if (!row.empty() && row.front() < min_front)
      fail(ErrorCode::BadInput, "row entry below its admissible range");
  }
}

int Symbol::value_at(int c, int p) const {
  int lo = first_position(c);
  if (p < lo) {
    if (flavor_ == SymbolFlavor::finite)
      fail(ErrorCode::BadInput, "position out of range");
    return p;  // frozen region
  }
  int hi = lo + stored_length(c) - 1;
  if (p > hi) fail(ErrorCode::BadInput, "position out of range");
  return rows_[c - 1][p - lo];
}

bool Symbol::has_bead(int c, int v) const {
  if (flavor_ == SymbolFlavor::semi_infinite && v < first_position(c)) return true;
  const auto& row = rows_[c - 1];
  return std::binary_search(row.begin(), row.end(), v);
}

bool Symbol::operator<(const Symbol& o) const {
  if (charge_.s != o.charge_.s) return charge_.s < o.charge_.s;
  if (m_ != o.m_) return m_ < o.m_;
  if (flavor_ != o.flavor_) return flavor_ < o.flavor_;
  return rows_ < o.rows_;
}

std::string Symbol::str() const {
  std::ostringstream os;
  for (int c = 1; c <= level(); ++c) {
    os << "[";
    const auto& row = rows_[c - 1];
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << " " << row[i];
    }
    os << " ]";
    if (c < level()) os << "\n";
  }
  return os.str();
}

Symbol symbol_of(const Multipartition& mp, const Charge& s, int m) {
  if (mp.level() != s.level()) fail(ErrorCode::ShapeMismatch, "level mismatch");
  std::vector<std::vector<int>> rows(s.level());
  for (int c = 1; c <= s.level(); ++c) {
    const Partition& part = mp.component(c);
    int len = std::max(0, s.at(c) + m);
    if (part.length() > len)
      fail(ErrorCode::TruncationTooSmall,
           "component " + std::to_string(c) + " needs more than " +
               std::to_string(len) + " entries");
    rows[c - 1].resize(len);
    for (int idx = 0; idx < len; ++idx) {
      int p = (1 - m) + idx;
      rows[c - 1][idx] = p + part.part(s.at(c) - p + 1);
    }
  }
  return Symbol(s, m, SymbolFlavor::semi_infinite, std::move(rows));
}

Symbol finite_symbol_of(const Multipartition& mp, const Charge& s) {
  if (mp.level() != s.level()) fail(ErrorCode::ShapeMismatch, "level mismatch");
  std::vector<std::vector<int>> rows(s.level());
  for (int c = 1; c <= s.level(); ++c) {
    const Partition& part = mp.component(c);
    if (s.at(c) < 0)
      fail(ErrorCode::FlavorMismatch, "finite flavor requires nonnegative charge");
    if (part.length() > s.at(c))
      fail(ErrorCode::TruncationTooSmall,
           "component " + std::to_string(c) + " needs more than " +
               std::to_string(s.at(c)) + " entries");
    rows[c - 1].resize(s.at(c));
    for (int j = 1; j <= s.at(c); ++j)
      rows[c - 1][j - 1] = (j - 1) + part.part(s.at(c) - j + 1);
  }
  return Symbol(s, 0, SymbolFlavor::finite, std::move(rows));
}

Multipartition partition_of(const Symbol& S) {
  std::vector<Partition> comps;
  comps.reserve(S.level());
  for (int c = 1; c <= S.level(); ++c) {
    std::vector<int> parts;
    const auto& row = S.row(c);
    int lo = S.first_position(c);
    // Top entry first: part index grows as the position decreases.
    for (int idx = (int)row.size() - 1; idx >= 0; --idx) {
      int p = lo + idx;
      int part = S.flavor() == SymbolFlavor::finite ? row[idx] - (p - 1)
                                                    : row[idx] - p;
      if (part > 0)
        parts.push_back(part);
      else
        break;  // entries below are frozen, all further parts vanish
    }
    comps.emplace_back(Partition(std::move(parts)));
  }
  return Multipartition(std::move(comps));
}

Symbol to_finite(const Symbol& S) {
  if (S.flavor() == SymbolFlavor::finite) return S;
  return finite_symbol_of(partition_of(S), S.charge());
}

Symbol to_semi_infinite(const Symbol& S, int m) {
  return symbol_of(partition_of(S), S.charge(), m);
}

bool is_standard(const Symbol& S) {
  if (!S.charge().is_decreasing())
    fail(ErrorCode::FlavorMismatch, "standardness requires a decreasing charge");
  for (int k = 1; k < S.level(); ++k) {
    int lo = std::max(S.first_position(k), S.first_position(k + 1));
    for (int p = lo; p <= S.charge().at(k + 1); ++p)
      if (S.value_at(k, p) < S.value_at(k + 1, p)) return false;
  }
  return true;
}

bool is_costandard(const Symbol& S) {
  if (!S.charge().is_decreasing())
    fail(ErrorCode::FlavorMismatch, "costandardness requires a decreasing charge");
  for (int k = 1; k < S.level(); ++k) {
    int lo = std::max(S.first_position(k), S.first_position(k + 1));
    for (int p = lo; p <= S.charge().at(k + 1); ++p)
      if (S.value_at(k, p) > S.value_at(k + 1, p)) return false;
  }
  return true;
}

namespace {

void require_ragged_decreasing(const Symbol& S, const char* what) {
  for (int c = 1; c < S.level(); ++c)
    if (S.stored_length(c) < S.stored_length(c + 1))
      fail(ErrorCode::FlavorMismatch,
           std::string(what) + " requires weakly decreasing row lengths");
}

// Rows of stored column j (1-based): the prefix of rows long enough.
int column_rows(const Symbol& S, int j) {
  int r = 0;
  while (r < S.level() && S.stored_length(r + 1) >= j) ++r;
  return r;
}

}  // namespace

bool is_simple_symbol(const Symbol& S) {
  require_ragged_decreasing(S, "simplicity");
  int width = S.level() ? S.stored_length(1) : 0;
  bool first = true;
  int prev = 0;
  for (int j = 1; j <= width; ++j) {
    int r = column_rows(S, j);
    for (int c = 1; c <= r; ++c) {
      int v = S.row(c)[j - 1];
      if (!first && v < prev) return false;
      prev = v;
      first = false;
    }
  }
  return true;
}

std::vector<int> z_sequence(const Symbol& S) {
  require_finite_decreasing(S, "z-sequence");
  int s1 = S.charge().at(1);
  std::vector<int> z;
  for (int g = 1; g <= s1; ++g) {
    for (int i = S.level(); i >= 1; --i) {
      int j = g - s1 + S.charge().at(i);
      if (j >= 1) z.push_back(S.row(i)[j - 1]);
    }
  }
  return z;
}

std::vector<int> weight_sequence(const Charge& s) {
  if (!s.is_decreasing())
    fail(ErrorCode::FlavorMismatch, "weight sequence requires a decreasing charge");
  int l = s.level();
  int s1 = s.at(1);
  std::vector<int> z;
  for (int g = 1; g <= s1; ++g)
    for (int i = l; i >= 1; --i)
      if (g - s1 + s.at(i) >= 1) z.push_back(l * (s1 - g) + (i - 1));
  return z;
}

BInvariants b_invariants(const Symbol& S) {
  require_finite_decreasing(S, "b-invariant");
  int l = S.level();
  BInvariants out{0, 0};
  for (int i = 1; i <= l; ++i) {
    int si = S.charge().at(i);
    for (int j = 1; j <= si; ++j) {
      Int w = Int(l) * (si - j) + (i - 1);
      Int beta = S.row(i)[j - 1];
      out.b += w * (beta - j + 1);
      out.b_prime += w * beta;
    }
  }
  // z(W).z(S) must reproduce b'.
  auto zw = weight_sequence(S.charge());
  auto zs = z_sequence(S);
  Int dot = 0;
  for (size_t i = 0; i < zw.size(); ++i) dot += Int(zw[i]) * zs[i];
  if (dot != out.b_prime)
    fail(ErrorCode::ShapeMismatch, "b' disagrees with the weight pairing");
  return out;
}

bool dominance_leq(const Symbol& S, const Symbol& T) {
  if (!(S.charge() == T.charge()) || S.truncation() != T.truncation() ||
      S.flavor() != T.flavor())
    fail(ErrorCode::ShapeMismatch, "dominance needs a common shape");
  auto zs = z_sequence(S);
  auto zt = z_sequence(T);
  long ps = 0, pt = 0;
  for (size_t i = 0; i < zs.size(); ++i) {
    ps += zs[i];
    pt += zt[i];
    if (ps > pt) return false;
  }
  return true;
}

bool FamilyKey::operator<(const FamilyKey& o) const {
  if (charge.s != o.charge.s) return charge.s < o.charge.s;
  if (m != o.m) return m < o.m;
  if (flavor != o.flavor) return flavor < o.flavor;
  return entries < o.entries;
}

FamilyKey family_key(const Symbol& S) {
  FamilyKey key;
  key.charge = S.charge();
  key.m = S.truncation();
  key.flavor = S.flavor();
  for (const auto& row : S.rows())
    key.entries.insert(key.entries.end(), row.begin(), row.end());
  std::sort(key.entries.begin(), key.entries.end());
  return key;
}

namespace {

struct Cell {
  int row;  // 1-based
  int idx;  // 0-based within the stored row
};

// Cells in the reading order that the flavor's enumeration uses: the z-order
// (right-aligned columns, bottom to top) for finite symbols, the stored
// columns top to bottom otherwise.  Both visit each row left to right.
std::vector<Cell> reading_cells(const Charge& s, int m, SymbolFlavor flavor) {
  std::vector<Cell> cells;
  int l = s.level();
  if (flavor == SymbolFlavor::finite) {
    int s1 = s.at(1);
    for (int g = 1; g <= s1; ++g)
      for (int i = l; i >= 1; --i) {
        int j = g - s1 + s.at(i);
        if (j >= 1) cells.push_back({i, j - 1});
      }
  } else {
    int width = 0;
    for (int c = 1; c <= l; ++c)
      width = std::max(width, std::max(0, s.at(c) + m));
    for (int j = 0; j < width; ++j)
      for (int c = 1; c <= l; ++c)
        if (std::max(0, s.at(c) + m) > j) cells.push_back({c, j});
  }
  return cells;
}

struct FamilyShape {
  FamilyKey key;
  std::vector<Cell> cells;
  std::vector<int> lengths;
  int lo = 0;  // first position, common to all rows

  explicit FamilyShape(const FamilyKey& k) : key(k) {
    if (k.flavor == SymbolFlavor::finite && !k.charge.is_decreasing())
      fail(ErrorCode::FlavorMismatch, "finite families require a decreasing charge");
    cells = reading_cells(k.charge, k.m, k.flavor);
    if (cells.size() != k.entries.size())
      fail(ErrorCode::InfeasibleKey, "entry count differs from the shape size");
    lengths.resize(k.charge.level());
    for (int c = 1; c <= k.charge.level(); ++c)
      lengths[c - 1] = k.flavor == SymbolFlavor::finite
                           ? k.charge.at(c)
                           : std::max(0, k.charge.at(c) + k.m);
    lo = k.flavor == SymbolFlavor::finite ? 0 : 1 - k.m;
    // Finite entries are nonnegative; stored semi-infinite entries sit at or
    // above their first position.
    if (!k.entries.empty() && k.entries.front() < lo)
      fail(ErrorCode::InfeasibleKey, "multiset entry below the admissible range");
  }

  Symbol assemble(const std::vector<std::vector<int>>& rows) const {
    return Symbol(key.charge, key.m, key.flavor, rows);
  }
};

// Depth-first fill of the cells with the remaining multiset.  emit returns
// false to stop the search (used for existence checks).
bool fill_cells(const FamilyShape& shape, size_t t,
                std::vector<std::vector<int>>& rows,
                std::map<int, int>& remaining,
                const std::function<bool(const std::vector<std::vector<int>>&)>& emit) {
  if (t == shape.cells.size()) return emit(rows);
  const Cell& cell = shape.cells[t];
  auto& row = rows[cell.row - 1];
  int min_value = cell.idx == 0 ? shape.lo : row[cell.idx - 1] + 1;
  for (auto it = remaining.lower_bound(min_value); it != remaining.end(); ++it) {
    if (it->second == 0) continue;
    row[cell.idx] = it->first;
    it->second -= 1;
    bool keep_going = fill_cells(shape, t + 1, rows, remaining, emit);
    it->second += 1;
    if (!keep_going) return false;
  }
  return true;
}

std::map<int, int> multiset_counts(const std::vector<int>& entries) {
  std::map<int, int> counts;
  for (int e : entries) counts[e] += 1;
  return counts;
}

std::vector<std::vector<int>> empty_rows(const FamilyShape& shape) {
  std::vector<std::vector<int>> rows(shape.lengths.size());
  for (size_t c = 0; c < rows.size(); ++c) rows[c].resize(shape.lengths[c]);
  return rows;
}

}  // namespace

std::vector<Symbol> enumerate_family(const FamilyKey& key, std::size_t max_count) {
  FamilyShape shape(key);
  auto rows = empty_rows(shape);
  auto remaining = multiset_counts(key.entries);
  std::vector<Symbol> out;
  fill_cells(shape, 0, rows, remaining,
             [&](const std::vector<std::vector<int>>& r) {
               if (out.size() >= max_count)
                 fail(ErrorCode::BadInput, "family larger than the requested cap");
               out.push_back(shape.assemble(r));
               return true;
             });
  return out;
}

Symbol minimal_symbol(const FamilyKey& key) {
  if (key.flavor != SymbolFlavor::finite)
    fail(ErrorCode::FlavorMismatch, "minimal symbol is defined on finite families");
  FamilyShape shape(key);
  auto rows = empty_rows(shape);
  auto remaining = multiset_counts(key.entries);

  auto completable = [&](size_t t) {
    bool found = false;
    fill_cells(shape, t, rows, remaining,
               [&](const std::vector<std::vector<int>>&) {
                 found = true;
                 return false;  // stop at the first completion
               });
    return found;
  };

  // Greedy: extend the z-prefix by the least unused entry that still admits a
  // completion.
  for (size_t t = 0; t < shape.cells.size(); ++t) {
    const Cell& cell = shape.cells[t];
    auto& row = rows[cell.row - 1];
    int min_value = cell.idx == 0 ? shape.lo : row[cell.idx - 1] + 1;
    bool placed = false;
    for (auto it = remaining.lower_bound(min_value); it != remaining.end(); ++it) {
      if (it->second == 0) continue;
      row[cell.idx] = it->first;
      it->second -= 1;
      if (completable(t + 1)) {
        placed = true;
        break;
      }
      it->second += 1;
    }
    if (!placed) fail(ErrorCode::InfeasibleKey, "no symbol realizes this multiset");
  }
  return shape.assemble(rows);
}

Symbol simple_multipartition(const FamilyKey& key) {
  FamilyShape shape(key);
  // The weakly increasing stored-column reading forces the sorted fill; it is
  // the one candidate, valid iff the rows come out strictly increasing.
  std::vector<Cell> cells;
  int width = 0;
  for (int len : shape.lengths) width = std::max(width, len);
  for (int j = 0; j < width; ++j)
    for (int c = 1; c <= key.charge.level(); ++c)
      if (shape.lengths[c - 1] > j) cells.push_back({c, j});
  if (cells.size() != key.entries.size())
    fail(ErrorCode::InfeasibleKey, "entry count differs from the shape size");
  auto rows = empty_rows(shape);
  for (size_t t = 0; t < cells.size(); ++t)
    rows[cells[t].row - 1][cells[t].idx] = key.entries[t];
  for (const auto& row : rows)
    for (size_t i = 0; i + 1 < row.size(); ++i)
      if (row[i] >= row[i + 1])
        fail(ErrorCode::InfeasibleKey, "sorted fill does not give increasing rows");
  return shape.assemble(rows);
}

int m_statistic(const Symbol& S) {
  require_ragged_decreasing(S, "the M statistic");
  int width = S.level() ? S.stored_length(1) : 0;
  int m = 0;
  for (int j = 2; j <= width; ++j) {
    int r = column_rows(S, j);
    for (int u = 1; u <= r; ++u) {
      int v = S.row(u)[j - 1];
      for (int w = 1; w < u; ++w)
        if (S.row(w)[j - 2] == v) ++m;
    }
  }
  return m;
}

namespace {

// Minimal-length permutation realizing the arrangement: equal values are
// matched in order, which minimizes the inversion count within the coset of
// the stabilizer.
std::vector<int> stable_matching(const std::vector<int>& source,
                                 const std::vector<int>& target) {
  int r = (int)source.size();
  std::vector<int> perm(r);
  std::vector<bool> used(r, false);
  for (int u = 0; u < r; ++u) {
    for (int w = 0; w < r; ++w) {
      if (!used[w] && source[w] == target[u]) {
        perm[u] = w + 1;
        used[w] = true;
        break;
      }
    }
  }
  return perm;
}

int inversions(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t a = 0; a < perm.size(); ++a)
    for (size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

}  // namespace

std::vector<AdmissibleSigma> admissible_sigmas(const Symbol& S) {
  if (!is_simple_symbol(S))
    fail(ErrorCode::NotSimple, "admissible permutations need a simple symbol");
  int l = S.level();
  int width = l ? S.stored_length(1) : 0;

  struct ColumnChoice {
    std::vector<int> values;
    std::vector<int> perm;
    int length;
  };
  std::vector<std::vector<ColumnChoice>> per_column(width);
  std::vector<int> col_rows(width);
  for (int j = 1; j <= width; ++j) {
    int r = column_rows(S, j);
    col_rows[j - 1] = r;
    std::vector<int> source(r);
    for (int c = 1; c <= r; ++c) source[c - 1] = S.row(c)[j - 1];
    std::vector<int> arr = source;  // already sorted: the symbol is simple
    do {
      auto perm = stable_matching(source, arr);
      per_column[j - 1].push_back({arr, perm, inversions(perm)});
    } while (std::next_permutation(arr.begin(), arr.end()));
  }

  std::vector<AdmissibleSigma> out;
  std::map<std::vector<std::vector<int>>, int> seen;
  std::vector<const ColumnChoice*> chosen(width);

  auto dfs = [&](auto&& self, int j) -> void {
    if (j > width) {
      std::vector<std::vector<int>> rows(l);
      std::vector<std::vector<int>> perms(width);
      int length = 0;
      for (int jj = 1; jj <= width; ++jj) {
        const ColumnChoice& cc = *chosen[jj - 1];
        for (int c = 1; c <= col_rows[jj - 1]; ++c)
          rows[c - 1].push_back(cc.values[c - 1]);
        perms[jj - 1] = cc.perm;
        length += cc.length;
      }
      if (++seen[rows] > 1)
        fail(ErrorCode::NotSimple, "two admissible elements share an image");
      AdmissibleSigma sigma;
      sigma.permuted = Symbol(S.charge(), S.truncation(), S.flavor(), rows);
      sigma.col_perms = std::move(perms);
      sigma.length = length;
      sigma.m_stat = m_statistic(sigma.permuted);
      out.push_back(std::move(sigma));
      return;
    }
    for (const ColumnChoice& cc : per_column[j - 1]) {
      if (j > 1) {
        const ColumnChoice& prev = *chosen[j - 2];
        bool ok = true;
        for (int c = 1; c <= col_rows[j - 1]; ++c) {
          if (cc.values[c - 1] <= prev.values[c - 1]) {
            ok = false;  // equality would repeat inside a row
            break;
          }
        }
        if (!ok) continue;
      }
      chosen[j - 1] = &cc;
      self(self, j + 1);
    }
  };
  dfs(dfs, 1);
  return out;
}

}  // namespace cmfock
