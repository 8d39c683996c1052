#pragma once

#include <vector>

#include "cmfock/errors.hpp"

namespace cmfock {

// A partition stored as its positive parts, weakly decreasing.  part(i) is
// 1-based and reads 0 beyond the stored length.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int part(int i) const {
    return (i >= 1 && i <= (int)parts_.size()) ? parts_[i - 1] : 0;
  }
  int length() const { return (int)parts_.size(); }
  int rank() const;
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// An l-tuple of partitions; components are 1-based.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components)
      : components_(std::move(components)) {}
  static Multipartition empty(int level) {
    return Multipartition(std::vector<Partition>(level));
  }

  int level() const { return (int)components_.size(); }
  const Partition& component(int c) const { return components_[c - 1]; }
  const std::vector<Partition>& components() const { return components_; }
  int rank() const;

  bool operator==(const Multipartition& o) const {
    return components_ == o.components_;
  }
  bool operator!=(const Multipartition& o) const { return !(*this == o); }
  bool operator<(const Multipartition& o) const {
    return components_ < o.components_;
  }

  std::string str() const;

 private:
  std::vector<Partition> components_;
};

enum class ChargeFlavor { general, decreasing, increasing };

struct Charge {
  std::vector<int> s;
  ChargeFlavor flavor = ChargeFlavor::general;

  Charge() = default;
  Charge(std::vector<int> entries, ChargeFlavor f = ChargeFlavor::general);

  static Charge decreasing(std::vector<int> entries) {
    return Charge(std::move(entries), ChargeFlavor::decreasing);
  }
  static Charge increasing(std::vector<int> entries) {
    return Charge(std::move(entries), ChargeFlavor::increasing);
  }

  int level() const { return (int)s.size(); }
  int at(int c) const { return s[c - 1]; }  // 1-based
  bool is_decreasing() const;

  bool operator==(const Charge& o) const { return s == o.s; }
  bool operator<(const Charge& o) const { return s < o.s; }
};

// Box (a,b,c): row a, column b, component c, all 1-based.
struct Box {
  int row = 0;
  int col = 0;
  int comp = 0;
  bool operator==(const Box& o) const {
    return row == o.row && col == o.col && comp == o.comp;
  }
};

enum class BoxKind { addable, removable };

int charged_content(const Box& box, const Charge& s);

// All addable (resp. removable) boxes with their charged contents, sorted by
// content and, within one content, by component index.  Two such boxes of
// equal content always lie in different components; this is asserted.
std::vector<std::pair<Box, int>> boundary_boxes(const Multipartition& mp,
                                                const Charge& s, BoxKind kind);

Multipartition add_box(const Multipartition& mp, const Box& box);
Multipartition remove_box(const Multipartition& mp, const Box& box);

// For [mu] = [lambda] + one box of content i: the (addable - removable)
// counts of lambda's content-i boxes in components strictly after / strictly
// before the added box.  Throws InvalidPair when mu is not lambda plus one
// content-i box.
std::pair<int, int> n_statistics(const Multipartition& lambda,
                                 const Multipartition& mu, int i,
                                 const Charge& s);

// N_i: #addable - #removable boxes of content i.
int weight_statistic(const Multipartition& mp, int i, const Charge& s);

// lambda^{(k)}_{i+s_k-s_{k+1}} >= lambda^{(k+1)}_i for all k < l, i >= 1.
// Requires a decreasing charge.
bool is_cylindrical(const Multipartition& mp, const Charge& s);

// All multipartitions of the given level and rank, lexicographically sorted.
std::vector<Multipartition> all_multipartitions(int level, int rank);

// All partitions of n, lexicographically sorted.
std::vector<Partition> all_partitions(int n);

}  // namespace cmfock
