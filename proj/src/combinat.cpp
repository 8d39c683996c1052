#include "cmfock/combinat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cmfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
      fail(ErrorCode::BadInput, "parts must be positive and weakly decreasing");
  }
}

int Partition::rank() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

int Multipartition::rank() const {
  int n = 0;
  for (const auto& p : components_) n += p.rank();
  return n;
}

std::string Multipartition::str() const {
  std::ostringstream os;
  os << "(";
  for (int c = 1; c <= level(); ++c) {
    if (c > 1) os << "|";
    const auto& parts = component(c).parts();
    if (parts.empty()) os << "-";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) os << ".";
      os << parts[i];
    }
  }
  os << ")";
  return os.str();
}

Charge::Charge(std::vector<int> entries, ChargeFlavor f)
    : s(std::move(entries)), flavor(f) {
  if (s.empty()) fail(ErrorCode::BadInput, "charge must have level >= 1");
  if (f == ChargeFlavor::decreasing) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] < s[i + 1])
        fail(ErrorCode::FlavorMismatch, "charge is not weakly decreasing");
  } else if (f == ChargeFlavor::increasing) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] > s[i + 1])
        fail(ErrorCode::FlavorMismatch, "charge is not weakly increasing");
  }
}

bool Charge::is_decreasing() const {
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] < s[i + 1]) return false;
  return true;
}

int charged_content(const Box& box, const Charge& s) {
  return box.col - box.row + s.at(box.comp);
}

namespace {

// Addable boxes of one partition: end of each distinct row length plus the
// new row below.
void addable_boxes_of(const Partition& p, int comp,
                      std::vector<Box>& out) {
  int len = p.length();
  for (int a = 1; a <= len; ++a) {
    if (a == 1 || p.part(a) < p.part(a - 1)) out.push_back({a, p.part(a) + 1, comp});
  }
  out.push_back({len + 1, 1, comp});
}

void removable_boxes_of(const Partition& p, int comp,
                        std::vector<Box>& out) {
  int len = p.length();
  for (int a = 1; a <= len; ++a) {
    if (a == len || p.part(a) > p.part(a + 1)) out.push_back({a, p.part(a), comp});
  }
}

}  // namespace

std::vector<std::pair<Box, int>> boundary_boxes(const Multipartition& mp,
                                                const Charge& s, BoxKind kind) {
  if (mp.level() != s.level())
    fail(ErrorCode::ShapeMismatch, "level mismatch between diagram and charge");
  std::vector<Box> boxes;
  for (int c = 1; c <= mp.level(); ++c) {
    if (kind == BoxKind::addable)
      addable_boxes_of(mp.component(c), c, boxes);
    else
      removable_boxes_of(mp.component(c), c, boxes);
  }
  std::vector<std::pair<Box, int>> out;
  out.reserve(boxes.size());
  for (const Box& b : boxes) out.emplace_back(b, charged_content(b, s));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) {
                     if (x.second != y.second) return x.second < y.second;
                     return x.first.comp < y.first.comp;
                   });
  // Equal content within one component cannot occur.
  for (size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i].second == out[i + 1].second &&
        out[i].first.comp == out[i + 1].first.comp)
      fail(ErrorCode::ShapeMismatch, "two boundary boxes of one component share a content");
  return out;
}

Multipartition add_box(const Multipartition& mp, const Box& box) {
  std::vector<Partition> comps = mp.components();
  std::vector<int> parts = comps[box.comp - 1].parts();
  if (box.row == (int)parts.size() + 1) {
    if (box.col != 1) fail(ErrorCode::BadInput, "box is not addable");
    parts.push_back(1);
  } else if (box.row >= 1 && box.row <= (int)parts.size() &&
             box.col == parts[box.row - 1] + 1) {
    parts[box.row - 1] += 1;
  } else {
    fail(ErrorCode::BadInput, "box is not addable");
  }
  comps[box.comp - 1] = Partition(parts);
  return Multipartition(comps);
}

Multipartition remove_box(const Multipartition& mp, const Box& box) {
  std::vector<Partition> comps = mp.components();
  std::vector<int> parts = comps[box.comp - 1].parts();
  if (box.row < 1 || box.row > (int)parts.size() ||
      box.col != parts[box.row - 1])
    fail(ErrorCode::BadInput, "box is not removable");
  parts[box.row - 1] -= 1;
  comps[box.comp - 1] = Partition(parts);
  return Multipartition(comps);
}

std::pair<int, int> n_statistics(const Multipartition& lambda,
                                 const Multipartition& mu, int i,
                                 const Charge& s) {
  if (lambda.level() != mu.level() || mu.rank() != lambda.rank() + 1)
    fail(ErrorCode::InvalidPair, "mu must be lambda plus one box");
  // Locate the added box.
  Box gamma{0, 0, 0};
  for (int c = 1; c <= lambda.level(); ++c) {
    const auto& pl = lambda.component(c);
    const auto& pm = mu.component(c);
    if (pl == pm) continue;
    if (gamma.comp != 0) fail(ErrorCode::InvalidPair, "more than one component changed");
    int rows = std::max(pl.length(), pm.length());
    for (int a = 1; a <= rows; ++a) {
      if (pm.part(a) == pl.part(a)) continue;
      if (pm.part(a) != pl.part(a) + 1 || gamma.row != 0)
        fail(ErrorCode::InvalidPair, "mu is not lambda plus one box");
      gamma = {a, pm.part(a), c};
    }
  }
  if (gamma.comp == 0) fail(ErrorCode::InvalidPair, "mu equals lambda");
  if (charged_content(gamma, s) != i)
    fail(ErrorCode::InvalidPair, "added box has the wrong charged content");

  int n_succ = 0, n_prec = 0;
  for (const auto& [b, ct] : boundary_boxes(lambda, s, BoxKind::addable)) {
    if (ct != i || b == gamma) continue;
    (b.comp > gamma.comp ? n_succ : n_prec) += 1;
  }
  for (const auto& [b, ct] : boundary_boxes(lambda, s, BoxKind::removable)) {
    if (ct != i) continue;
    (b.comp > gamma.comp ? n_succ : n_prec) -= 1;
  }
  return {n_succ, n_prec};
}

int weight_statistic(const Multipartition& mp, int i, const Charge& s) {
  int n = 0;
  for (const auto& [b, ct] : boundary_boxes(mp, s, BoxKind::addable))
    if (ct == i) ++n;
  for (const auto& [b, ct] : boundary_boxes(mp, s, BoxKind::removable))
    if (ct == i) --n;
  return n;
}

bool is_cylindrical(const Multipartition& mp, const Charge& s) {
  if (!s.is_decreasing())
    fail(ErrorCode::FlavorMismatch, "cylindricity requires a decreasing charge");
  if (mp.level() != s.level())
    fail(ErrorCode::ShapeMismatch, "level mismatch");
  for (int k = 1; k < mp.level(); ++k) {
    int shift = s.at(k) - s.at(k + 1);
    int len = mp.component(k + 1).length();
    for (int i = 1; i <= len; ++i)
      if (mp.component(k).part(i + shift) < mp.component(k + 1).part(i))
        return false;
  }
  return true;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // Parts chosen weakly decreasing; lexicographic by construction.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> all_multipartitions(int level, int rank) {
  std::map<int, std::vector<Partition>> table;
  for (int k = 0; k <= rank; ++k) table[k] = all_partitions(k);
  std::vector<Multipartition> out;
  std::vector<Partition> stack;
  auto build = [&](auto&& self, int c, int remaining) -> void {
    if (c > level) {
      if (remaining == 0) out.emplace_back(Multipartition(stack));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      if (c == level && k != remaining) continue;
      for (const auto& p : table[k]) {
        stack.push_back(p);
        self(self, c + 1, remaining - k);
        stack.pop_back();
      }
    }
  };
  build(build, 1, rank);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cmfock
