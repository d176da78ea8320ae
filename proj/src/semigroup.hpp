#ifndef DIFUN_SEMIGROUP_HPP_
#define DIFUN_SEMIGROUP_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relations.hpp"

namespace difun {

// Caps the number of ⋄ products a walk may evaluate; throws BudgetError
// once exceeded so long-running searches fail loudly instead of hanging.
class ProductBudget {
 public:
  explicit ProductBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t k = 1);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Immutable sorted set of relations; the canonical ordering makes every
// enumeration and closure result reproducible run to run.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<DifunRelation> elems);

  bool contains(const DifunRelation& a) const;
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const DifunRelation& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<DifunRelation>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<DifunRelation> items_;
};

ElementSet set_union_of(const ElementSet& a, const ElementSet& b);
ElementSet set_difference_of(const ElementSet& a, const ElementSet& b);

struct ClosureOptions {
  ProductBudget* budget = nullptr;
  // Stop expanding once this many elements are known (0 = run to the end).
  std::size_t stop_at_size = 0;
  // Observe every product as it is formed: (left, right, left ⋄ right).
  std::function<void(const DifunRelation&, const DifunRelation&,
                     const DifunRelation&)>
      on_product;
};

class ClosureResult {
 public:
  const ElementSet& elements() const { return sorted_; }
  // False when stop_at_size cut the walk short of a fixed point.
  bool exhausted() const { return exhausted_; }
  std::uint64_t products_used() const { return products_used_; }

  // Generator indices whose left-to-right ⋄ product equals `a`; shortest
  // possible because discovery is breadth-first.
  std::vector<int> word_for(const DifunRelation& a) const;

 private:
  friend ClosureResult closure(const std::vector<DifunRelation>&,
                               const ClosureOptions&);
  std::vector<DifunRelation> discovered_;          // in BFS order
  std::vector<std::pair<int, int>> provenance_;    // (prefix index or -1, generator)
  std::unordered_map<DifunRelation, int> index_;
  ElementSet sorted_;
  bool exhausted_ = true;
  std::uint64_t products_used_ = 0;
};

// Subsemigroup generated by `generators`: breadth-first over right
// products, so every element carries a shortest factorization.
ClosureResult closure(const std::vector<DifunRelation>& generators,
                      const ClosureOptions& options = {});

// Does ⟨generators⟩ contain every element of `target`? Walks the same BFS
// but stops as soon as the last target element appears.
bool closure_contains(const std::vector<DifunRelation>& generators,
                      const ElementSet& target, ProductBudget* budget = nullptr);

// All elements of rank exactly r (r = 0 gives just the empty relation).
ElementSet enumerate_j_class(int n, int r);

// The ideal of rank ≤ r.
ElementSet enumerate_ideal(int n, int r);

// Every difunctional relation on {1..n}.
ElementSet enumerate_all(int n);

enum class GreenRelation { R, L, J, H };

// Structural preorder: R compares kernel block sets by inclusion, L the
// cokernel block sets, J the ranks, H requires both R and L.
bool green_leq(GreenRelation rel, const DifunRelation& a,
               const DifunRelation& b);
bool green_equivalent(GreenRelation rel, const DifunRelation& a,
                      const DifunRelation& b);

// The equivalence class of `a`, built structurally (no products).
ElementSet green_class_of(GreenRelation rel, const DifunRelation& a);

// {x ∈ universe : x ≤ b} read off the defining translate conditions
// (x = b ⋄ s, x = s ⋄ b, x = s ⋄ b ⋄ t), with `universe` playing S.
ElementSet definitional_down_set(GreenRelation rel, const DifunRelation& b,
                                 const ElementSet& universe,
                                 ProductBudget* budget = nullptr);
bool green_leq_definitional(GreenRelation rel, const DifunRelation& a,
                            const DifunRelation& b, const ElementSet& universe,
                            ProductBudget* budget = nullptr);

// The rank-r elements with multiplication truncated at rank r: products
// that fall below come back as nullopt (the adjoined zero).
class PrincipalFactor {
 public:
  PrincipalFactor(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  const ElementSet& nonzero_elements() const { return elements_; }
  std::optional<DifunRelation> product(const DifunRelation& a,
                                       const DifunRelation& b) const;

 private:
  int n_;
  int r_;
  ElementSet elements_;
};

struct SubsetSearchOptions {
  ProductBudget* budget = nullptr;
  // Called on each partial candidate; returning false abandons every
  // superset, so the predicate must be monotone (false stays false).
  std::function<bool(const std::vector<DifunRelation>& partial, int slots_left)>
      viable;
};

struct RankSearchResult {
  int size = -1;  // -1: nothing up to max_size generates the target
  std::vector<DifunRelation> witness;
  std::uint64_t closures_run = 0;
};

// Smallest subset of `pool` (searched in size order, lexicographically by
// pool index) whose closure together with `base` covers `target`.
RankSearchResult smallest_generating_subset(
    const ElementSet& target, const std::vector<DifunRelation>& pool,
    int max_size, const std::vector<DifunRelation>& base = {},
    const SubsetSearchOptions& options = {});

// Rank of the ideal of rank ≤ r by exhaustive subset search.
RankSearchResult brute_force_rank(int n, int r, int max_size,
                                  const SubsetSearchOptions& options = {});

// Smallest A ⊆ J_r with J_r ⊆ ⟨A⟩.  Prunes on a necessary condition: a
// rank-preserving product keeps its first factor's kernel and last
// factor's cokernel, so A must realize every kernel and cokernel in J_r.
RankSearchResult brute_force_top_class_rank(
    int n, int r, int max_size, const SubsetSearchOptions& options = {});

// Smallest B ⊆ I_{r-1} with I_r ⊆ ⟨J_r ∪ B⟩.
RankSearchResult brute_force_relative_rank(
    int n, int r, int max_size, const SubsetSearchOptions& options = {});

}  // namespace difun

#endif  // DIFUN_SEMIGROUP_HPP_
