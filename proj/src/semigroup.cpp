#include "semigroup.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <unordered_set>

#include "combinatorics.hpp"
#include "errors.hpp"

namespace difun {

void ProductBudget::charge(std::uint64_t k) {
  used_ += k;
  if (used_ > limit_) throw BudgetError("product budget exhausted");
}

ElementSet::ElementSet(std::vector<DifunRelation> elems) : items_(std::move(elems)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool ElementSet::contains(const DifunRelation& a) const {
  return std::binary_search(items_.begin(), items_.end(), a);
}

ElementSet set_union_of(const ElementSet& a, const ElementSet& b) {
  std::vector<DifunRelation> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return ElementSet(std::move(out));
}

ElementSet set_difference_of(const ElementSet& a, const ElementSet& b) {
  std::vector<DifunRelation> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ElementSet(std::move(out));
}

std::vector<int> ClosureResult::word_for(const DifunRelation& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw DomainError("element is not in the closure");
  std::vector<int> word;
  int at = it->second;
  while (at >= 0) {
    word.push_back(provenance_[static_cast<std::size_t>(at)].second);
    at = provenance_[static_cast<std::size_t>(at)].first;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

namespace {

void check_uniform_n(const std::vector<DifunRelation>& elems) {
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (elems[i].n() != elems[0].n())
      throw DimensionError("elements live on different ground sets");
}

}  // namespace

ClosureResult closure(const std::vector<DifunRelation>& generators,
                      const ClosureOptions& options) {
  check_uniform_n(generators);
  ClosureResult res;

  auto add = [&res](const DifunRelation& d, int prefix, int gen) {
    auto [it, inserted] =
        res.index_.try_emplace(d, static_cast<int>(res.discovered_.size()));
    if (!inserted) return;
    res.discovered_.push_back(d);
    res.provenance_.emplace_back(prefix, gen);
  };
  auto at_cap = [&res, &options] {
    return options.stop_at_size != 0 &&
           res.discovered_.size() >= options.stop_at_size;
  };

  bool stopped = false;
  for (std::size_t gi = 0; gi < generators.size() && !stopped; ++gi) {
    add(generators[gi], -1, static_cast<int>(gi));
    stopped = at_cap();
  }

  for (std::size_t qi = 0; qi < res.discovered_.size() && !stopped; ++qi) {
    for (std::size_t gi = 0; gi < generators.size() && !stopped; ++gi) {
      if (options.budget) options.budget->charge();
      DifunRelation left = res.discovered_[qi];  // copy: vector may grow
      DifunRelation prod = diamond(left, generators[gi]);
      ++res.products_used_;
      if (options.on_product) options.on_product(left, generators[gi], prod);
      add(prod, static_cast<int>(qi), static_cast<int>(gi));
      stopped = at_cap();
    }
  }

  res.exhausted_ = !stopped;
  res.sorted_ = ElementSet(res.discovered_);
  return res;
}

bool closure_contains(const std::vector<DifunRelation>& generators,
                      const ElementSet& target, ProductBudget* budget) {
  if (target.empty()) return true;
  if (generators.empty()) return false;
  check_uniform_n(generators);

  std::unordered_set<DifunRelation> missing(target.begin(), target.end());
  std::unordered_set<DifunRelation> seen;
  std::vector<DifunRelation> frontier;

  auto add = [&](const DifunRelation& d) {
    if (seen.insert(d).second) {
      frontier.push_back(d);
      missing.erase(d);
    }
  };

  for (const auto& g : generators) {
    add(g);
    if (missing.empty()) return true;
  }
  for (std::size_t qi = 0; qi < frontier.size(); ++qi) {
    for (const auto& g : generators) {
      if (budget) budget->charge();
      DifunRelation left = frontier[qi];  // copy: vector may grow
      add(diamond(left, g));
      if (missing.empty()) return true;
    }
  }
  return false;
}

namespace {

// Every partition of every subset of {1..n} into exactly r blocks — the
// possible kernels (equally, cokernels) of a rank-r element.
std::vector<SetPartition> rank_r_partitions(int n, int r) {
  std::vector<SetPartition> out;
  for (Mask d = 0; d <= full_mask(n); ++d) {
    if (popcount(d) < r) continue;
    auto parts = enumerate_partitions(n, d, r);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

void check_class_args(int n, int r) {
  if (n < 1 || n > kMaxEnumerationSupport)
    throw DimensionError("enumeration supports 1 <= n <= 12");
  if (r < 0 || r > n) throw DomainError("rank must satisfy 0 <= r <= n");
}

}  // namespace

ElementSet enumerate_j_class(int n, int r) {
  check_class_args(n, r);
  auto kernels = rank_r_partitions(n, r);
  auto cokernels = kernels;
  std::vector<DifunRelation> out;
  std::vector<int> pairing(static_cast<std::size_t>(r));
  for (const auto& ker : kernels) {
    for (const auto& coker : cokernels) {
      std::iota(pairing.begin(), pairing.end(), 0);
      do {
        out.push_back(DifunRelation::make(ker, coker, pairing));
      } while (std::next_permutation(pairing.begin(), pairing.end()));
    }
  }
  return ElementSet(std::move(out));
}

ElementSet enumerate_ideal(int n, int r) {
  check_class_args(n, r);
  std::vector<DifunRelation> out;
  for (int k = 0; k <= r; ++k) {
    const auto& cls = enumerate_j_class(n, k);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  return ElementSet(std::move(out));
}

ElementSet enumerate_all(int n) { return enumerate_ideal(n, n); }

namespace {

// Is every block of `inner` a block of `outer`?
bool blocks_included(const SetPartition& inner, const SetPartition& outer) {
  std::vector<Mask> a = inner.blocks();
  std::vector<Mask> b = outer.blocks();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool green_leq(GreenRelation rel, const DifunRelation& a,
               const DifunRelation& b) {
  if (a.n() != b.n())
    throw DimensionError("elements live on different ground sets");
  switch (rel) {
    case GreenRelation::R:
      return blocks_included(a.kernel(), b.kernel());
    case GreenRelation::L:
      return blocks_included(a.cokernel(), b.cokernel());
    case GreenRelation::J:
      return a.rank() <= b.rank();
    case GreenRelation::H:
      return blocks_included(a.kernel(), b.kernel()) &&
             blocks_included(a.cokernel(), b.cokernel());
  }
  throw DomainError("unknown Green relation");
}

bool green_equivalent(GreenRelation rel, const DifunRelation& a,
                      const DifunRelation& b) {
  return green_leq(rel, a, b) && green_leq(rel, b, a);
}

ElementSet green_class_of(GreenRelation rel, const DifunRelation& a) {
  int n = a.n();
  int r = a.rank();
  std::vector<DifunRelation> out;
  std::vector<int> pairing(static_cast<std::size_t>(r));
  switch (rel) {
    case GreenRelation::R: {
      for (const auto& coker : rank_r_partitions(n, r)) {
        std::iota(pairing.begin(), pairing.end(), 0);
        do {
          out.push_back(DifunRelation::make(a.kernel(), coker, pairing));
        } while (std::next_permutation(pairing.begin(), pairing.end()));
      }
      break;
    }
    case GreenRelation::L: {
      for (const auto& ker : rank_r_partitions(n, r)) {
        std::iota(pairing.begin(), pairing.end(), 0);
        do {
          out.push_back(DifunRelation::make(ker, a.cokernel(), pairing));
        } while (std::next_permutation(pairing.begin(), pairing.end()));
      }
      break;
    }
    case GreenRelation::J:
      return enumerate_j_class(n, r);
    case GreenRelation::H: {
      std::iota(pairing.begin(), pairing.end(), 0);
      do {
        out.push_back(DifunRelation::make(a.kernel(), a.cokernel(), pairing));
      } while (std::next_permutation(pairing.begin(), pairing.end()));
      break;
    }
  }
  return ElementSet(std::move(out));
}

ElementSet definitional_down_set(GreenRelation rel, const DifunRelation& b,
                                 const ElementSet& universe,
                                 ProductBudget* budget) {
  for (const auto& u : universe)
    if (u.n() != b.n())
      throw DimensionError("universe and element ground sets differ");

  auto charge = [budget] {
    if (budget) budget->charge();
  };

  std::vector<DifunRelation> out;
  switch (rel) {
    case GreenRelation::R: {
      out.push_back(b);
      for (const auto& s : universe) {
        charge();
        out.push_back(diamond(b, s));
      }
      break;
    }
    case GreenRelation::L: {
      out.push_back(b);
      for (const auto& s : universe) {
        charge();
        out.push_back(diamond(s, b));
      }
      break;
    }
    case GreenRelation::J: {
      // T = S¹b, then TS¹ = S¹bS¹.
      std::unordered_set<DifunRelation> t_set{b};
      for (const auto& s : universe) {
        charge();
        t_set.insert(diamond(s, b));
      }
      out.assign(t_set.begin(), t_set.end());
      for (const auto& t : t_set) {
        for (const auto& s : universe) {
          charge();
          out.push_back(diamond(t, s));
        }
      }
      break;
    }
    case GreenRelation::H: {
      ElementSet right = definitional_down_set(GreenRelation::R, b, universe, budget);
      ElementSet left = definitional_down_set(GreenRelation::L, b, universe, budget);
      std::set_intersection(right.begin(), right.end(), left.begin(),
                            left.end(), std::back_inserter(out));
      break;
    }
  }
  return ElementSet(std::move(out));
}

bool green_leq_definitional(GreenRelation rel, const DifunRelation& a,
                            const DifunRelation& b, const ElementSet& universe,
                            ProductBudget* budget) {
  return definitional_down_set(rel, b, universe, budget).contains(a);
}

PrincipalFactor::PrincipalFactor(int n, int r)
    : n_(n), r_(r), elements_(enumerate_j_class(n, r)) {}

std::optional<DifunRelation> PrincipalFactor::product(
    const DifunRelation& a, const DifunRelation& b) const {
  if (a.n() != n_ || b.n() != n_)
    throw DimensionError("element is not on this factor's ground set");
  if (a.rank() != r_ || b.rank() != r_)
    throw DomainError("element is not in this rank class");
  DifunRelation d = diamond(a, b);
  if (d.rank() == r_) return d;
  return std::nullopt;  // fell into the lower ideal: the adjoined zero
}

namespace {

struct SubsetSearcher {
  const ElementSet& target;
  const std::vector<DifunRelation>& pool;
  const std::vector<DifunRelation>& base;
  const SubsetSearchOptions& options;

  std::vector<DifunRelation> chosen;
  std::vector<DifunRelation> work;  // base ++ chosen
  std::uint64_t closures_run = 0;
  bool found = false;

  bool viable(int slots_left) const {
    return !options.viable || options.viable(chosen, slots_left);
  }

  // Chooses `slots_left` more pool elements, indices >= start, in order.
  void extend(std::size_t start, int slots_left) {
    if (found) return;
    if (slots_left == 0) {
      ++closures_run;
      if (closure_contains(work, target, options.budget)) found = true;
      return;
    }
    for (std::size_t i = start;
         i + static_cast<std::size_t>(slots_left) <= pool.size() && !found;
         ++i) {
      chosen.push_back(pool[i]);
      work.push_back(pool[i]);
      if (viable(slots_left - 1)) extend(i + 1, slots_left - 1);
      if (!found) {
        chosen.pop_back();
        work.pop_back();
      }
    }
  }
};

}  // namespace

RankSearchResult smallest_generating_subset(const ElementSet& target,
                                            const std::vector<DifunRelation>& pool,
                                            int max_size,
                                            const std::vector<DifunRelation>& base,
                                            const SubsetSearchOptions& options) {
  if (max_size < 0) throw DomainError("max_size must be nonnegative");
  RankSearchResult result;
  for (int k = 0; k <= max_size; ++k) {
    SubsetSearcher searcher{target, pool, base, options, {}, base};
    if (searcher.viable(k)) searcher.extend(0, k);
    result.closures_run += searcher.closures_run;
    if (searcher.found) {
      result.size = k;
      result.witness = std::move(searcher.chosen);
      return result;
    }
  }
  return result;
}

namespace {

// Necessary condition shared by both searches: a product keeps rank only
// when every factor has that rank, and then it inherits its first factor's
// kernel and last factor's cokernel. Likewise a full-domain element's
// kernel is its first factor's kernel outright. So a generating candidate
// must itself realize every kernel (and cokernel) in `needed`; each
// element supplies exactly one of each, which bounds how many can still be
// missing by the number of open slots.
SubsetSearchOptions with_coverage_prune(std::set<SetPartition> needed_kernels,
                                        std::set<SetPartition> needed_cokernels,
                                        const SubsetSearchOptions& options) {
  auto user = options.viable;
  auto kernels = std::make_shared<const std::set<SetPartition>>(
      std::move(needed_kernels));
  auto cokernels = std::make_shared<const std::set<SetPartition>>(
      std::move(needed_cokernels));
  SubsetSearchOptions pruned = options;
  pruned.viable = [kernels, cokernels, user](
                      const std::vector<DifunRelation>& partial,
                      int slots_left) {
    std::set<SetPartition> kers, cokers;
    for (const auto& p : partial) {
      if (kernels->count(p.kernel())) kers.insert(p.kernel());
      if (cokernels->count(p.cokernel())) cokers.insert(p.cokernel());
    }
    auto slots = static_cast<std::size_t>(slots_left);
    if (kernels->size() - kers.size() > slots) return false;
    if (cokernels->size() - cokers.size() > slots) return false;
    return !user || user(partial, slots_left);
  };
  return pruned;
}

std::set<SetPartition> top_class_partitions(int n, int r) {
  auto parts = rank_r_partitions(n, r);
  return std::set<SetPartition>(parts.begin(), parts.end());
}

}  // namespace

RankSearchResult brute_force_rank(int n, int r, int max_size,
                                  const SubsetSearchOptions& options) {
  ElementSet ideal = enumerate_ideal(n, r);
  // The top class demands all its kernels; below it, only full-ground-set
  // kernels are forced (a partial-domain element can arise as a product).
  auto needed = top_class_partitions(n, r);
  for (int k = 1; k < r; ++k)
    for (const auto& p : enumerate_partitions(n, full_mask(n), k))
      needed.insert(p);
  auto pruned = with_coverage_prune(needed, needed, options);
  return smallest_generating_subset(ideal, ideal.items(), max_size, {}, pruned);
}

RankSearchResult brute_force_top_class_rank(int n, int r, int max_size,
                                            const SubsetSearchOptions& options) {
  ElementSet cls = enumerate_j_class(n, r);
  auto needed = top_class_partitions(n, r);
  auto pruned = with_coverage_prune(needed, needed, options);
  return smallest_generating_subset(cls, cls.items(), max_size, {}, pruned);
}

RankSearchResult brute_force_relative_rank(int n, int r, int max_size,
                                           const SubsetSearchOptions& options) {
  if (r < 1) throw DomainError("relative rank needs r >= 1");
  ElementSet ideal = enumerate_ideal(n, r);
  ElementSet lower = enumerate_ideal(n, r - 1);
  ElementSet top = enumerate_j_class(n, r);
  return smallest_generating_subset(ideal, lower.items(), max_size, top.items(),
                                    options);
}

}  // namespace difun
