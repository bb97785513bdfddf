#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace equilog {

/// A partial equivalence relation on {0..n-1}, stored as block labels; -1 marks points
/// outside the domain. Labels are normalized to first-occurrence order, so two Per values
/// are equal iff they are the same relation.
class Per {
 public:
  Per() = default;
  explicit Per(std::vector<int> labels);

  static Per discrete(std::size_t n);
  static Per full(std::size_t n);
  static Per empty(std::size_t n);
  /// Blocks must be disjoint; points not covered are undefined.
  static Per from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
  /// Throws InputError unless the pairs form a symmetric, transitive relation.
  static Per from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// Smallest equivalence relation on n points containing the pairs (total).
  static Per equivalence_closure(std::size_t n,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t x) const { return labels_[x]; }
  bool related(std::size_t x, std::size_t y) const {
    return labels_[x] >= 0 && labels_[x] == labels_[y];
  }
  bool defined(std::size_t x) const { return labels_[x] >= 0; }
  std::size_t block_count() const;
  bool is_total() const;
  std::vector<std::vector<std::size_t>> blocks() const;
  std::vector<std::size_t> domain() const;

  friend bool operator==(const Per&, const Per&) = default;

 private:
  std::vector<int> labels_;
};

}  // namespace equilog
