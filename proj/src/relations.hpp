#ifndef DIFUN_RELATIONS_HPP_
#define DIFUN_RELATIONS_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace difun {

// Ground-set elements are 1-based; bit x-1 of a Mask represents element x.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;

Mask full_mask(int n);
int popcount(Mask m);
// 1-based position of the least element of a nonempty mask.
int min_element(Mask m);

/// An arbitrary binary relation on {1..n}, stored as n packed row images.
/// Row x is the image x·alpha; columns are recovered by transposing.
class BinaryRelation {
 public:
  explicit BinaryRelation(int n);
  static BinaryRelation from_pairs(int n,
                                   const std::vector<std::pair<int, int>>& pairs);
  static BinaryRelation identity(int n);
  static BinaryRelation full(int n);

  int n() const { return n_; }
  bool contains(int x, int y) const;
  void add(int x, int y);
  // Image of x under the relation (the set x·alpha).
  Mask row(int x) const;
  // Preimage of y (the set alpha·y), computed by transposition.
  Mask column(int y) const;
  bool empty() const;
  std::size_t pair_count() const;
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  int n_;
  std::array<Mask, kMaxGroundSet> rows_{};
};

/// A partition of a subset of {1..n} into nonempty disjoint blocks,
/// kept in min-order: min(block_0) < min(block_1) < ...
/// Zero blocks is the partition of the empty set.
class SetPartition {
 public:
  explicit SetPartition(int n);
  // Validates and min-orders the given blocks.
  static SetPartition from_masks(int n, std::vector<Mask> blocks);
  static SetPartition from_blocks(int n,
                                  const std::vector<std::vector<int>>& blocks);
  // The partition {{1},...,{k}}.
  static SetPartition singletons(int n, int k);

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Mask>& blocks() const { return blocks_; }
  Mask block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  // Union of all blocks.
  Mask support() const;
  bool spans_ground_set() const { return support() == full_mask(n_); }
  // Index of the block containing x, or -1.
  int block_of(int x) const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend std::strong_ordering operator<=>(const SetPartition&,
                                          const SetPartition&) = default;

 private:
  int n_;
  std::vector<Mask> blocks_;
};

/// A difunctional relation in canonical form: matched kernel/cokernel blocks
/// with the pairing recorded against min-ordered kernel blocks, so structural
/// equality is canonical. Rank 0 is the empty relation (the zero of the
/// diamond semigroup).
class DifunRelation {
 public:
  static DifunRelation empty(int n);
  static DifunRelation identity(int n);
  // kernel block i maps onto cokernel block pairing[i]; canonicalises input.
  static DifunRelation make(SetPartition kernel, SetPartition cokernel,
                            std::vector<int> pairing);
  // Convenience: block pairs (A_i, B_i), identity pairing after min-ordering
  // the A_i and carrying each B along with its A.
  static DifunRelation from_block_pairs(
      int n, const std::vector<std::pair<Mask, Mask>>& rectangles);

  int n() const { return n_; }
  int rank() const { return kernel_.block_count(); }
  const SetPartition& kernel() const { return kernel_; }
  const SetPartition& cokernel() const { return cokernel_; }
  const std::vector<int>& pairing() const { return pairing_; }
  // Cokernel block matched with kernel block i.
  Mask image_block(int i) const {
    return cokernel_.block(pairing_[static_cast<std::size_t>(i)]);
  }

  Mask dom() const { return kernel_.support(); }
  Mask codom() const { return cokernel_.support(); }
  int defect() const { return n_ - popcount(dom()); }
  int codefect() const { return n_ - popcount(codom()); }

  friend bool operator==(const DifunRelation&, const DifunRelation&) = default;
  friend std::strong_ordering operator<=>(const DifunRelation& a,
                                          const DifunRelation& b);

 private:
  DifunRelation(int n, SetPartition kernel, SetPartition cokernel,
                std::vector<int> pairing);

  int n_;
  SetPartition kernel_;
  SetPartition cokernel_;
  std::vector<int> pairing_;
};

std::size_t hash_value(const DifunRelation& d);

struct RelationParams {
  int rank;
  Mask dom;
  Mask codom;
  SetPartition ker;
  SetPartition coker;
  int defect;
  int codefect;
};

// alpha ∘ beta = {(x,y) : x·alpha ∩ beta·y ≠ ∅}, ordinary composition.
BinaryRelation compose(const BinaryRelation& a, const BinaryRelation& b);

// alpha ⋄ beta = {(x,y) : x·alpha = beta·y ≠ ∅}. Associative on
// difunctional relations only.
BinaryRelation diamond(const BinaryRelation& a, const BinaryRelation& b);

BinaryRelation inverse(const BinaryRelation& a);

// alpha = alpha ∘ alpha⁻¹ ∘ alpha
bool is_difunctional(const BinaryRelation& a);

// Unique block-pair canonical form. Throws FormError with a witness pair
// if the input is not difunctional.
DifunRelation to_canonical(const BinaryRelation& a);

// Union of the blocks A_i × B_{pairing(i)}.
BinaryRelation expand_pairs(const DifunRelation& d);

// Block-matching diamond product: kernel block A_i of the result pairs the
// image blocks of `a` with the kernel blocks of `b`. Stays canonical.
DifunRelation diamond(const DifunRelation& a, const DifunRelation& b);

DifunRelation inverse(const DifunRelation& d);

RelationParams params(const DifunRelation& d);

// True iff every kernel and cokernel block is a singleton (membership in
// the symmetric inverse monoid).
bool is_partial_injection(const DifunRelation& d);

}  // namespace difun

template <>
struct std::hash<difun::DifunRelation> {
  std::size_t operator()(const difun::DifunRelation& d) const {
    return difun::hash_value(d);
  }
};

#endif  // DIFUN_RELATIONS_HPP_
