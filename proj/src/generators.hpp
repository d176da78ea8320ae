#ifndef DIFUN_GENERATORS_HPP_
#define DIFUN_GENERATORS_HPP_

#include <vector>

#include "combinatorics.hpp"
#include "relations.hpp"
#include "semigroup.hpp"

namespace difun {

// Collapse each block of p onto one point: [A_1…A_k ; {1}…{k}].
// p must partition the whole ground set.
DifunRelation lambda_rel(const SetPartition& p);

// The inverse shape: [{1}…{k} ; A_1…A_k].
DifunRelation rho_rel(const SetPartition& p);

// Block-to-block link [P_1…P_k ; Q_1…Q_k] between two full-set partitions
// with the same number of blocks, matched in min-order.
DifunRelation phi_rel(const SetPartition& p, const SetPartition& q);

// The chain set over Part({1..n}, k) in enumeration order: a φ link from
// each partition to its successor, plus the final λ and the initial ρ.
// Exactly stirling2(n,k) + 1 elements; requires 1 <= k <= n-1.
ElementSet sigma_k(int n, int k);

// λ_p (resp. ρ_p) for every full-set partition with at most max_blocks
// blocks.
ElementSet lambda_family(int n, int max_blocks);
ElementSet rho_family(int n, int max_blocks);

// J_r together with the chain sets for every lower level: its closure is
// the whole ideal of rank <= r. Deliberately not minimal at the top.
ElementSet build_ideal_generators(int n, int r);

// a = beta ⋄ gamma ⋄ delta with beta a block collapse (full domain),
// gamma a partial injection of the same rank as a, delta a block
// expansion (full codomain).
struct Decomposition {
  DifunRelation beta;
  DifunRelation gamma;
  DifunRelation delta;
};

// Requires rank(a) < r, the level whose generating set the pieces feed.
Decomposition decompose(const DifunRelation& a, int r);

enum class Verdict { FormulaOnly, ClosureVerified, ExhaustivelyVerified };

struct RankReport {
  int n = 0;
  int r = 0;
  BigCount rho;                  // r + (r+1)S(n,r+1) + sum_{k<=r} S(n,k)
  BigCount rank;                 // rho, minus one when r is 1 or 2
  BigCount relative_rank;        // r-1 + sum_{k<r} S(n,k)
  BigCount brandt_rank;          // rank(S_r) - 1 + (r+1)S(n,r+1) + S(n,r)
  BigCount constructed_set_size; // |build_ideal_generators(n,r)|
  bool claimed_range = true;     // the closed formulas are asserted for n >= 2
  Verdict verification = Verdict::FormulaOnly;
};

// Formula-level report for the ideal of rank <= r. Always computes; flags
// n < 2, where the closed forms are not asserted (and fail at n = 1).
RankReport rank_report(int n, int r);

BigCount relative_rank_formula(int n, int r);
BigCount brandt_rank_formula(int n, int r);

// Necessary-element checklist for a set intended to finish the ideal of
// rank <= r next to J_r: every full-set partition with fewer than r blocks
// must appear as a kernel and as a cokernel, and every rank 1..r-1 needs a
// full-domain element with spare codomain plus its mirror image.
struct AuditVerdict {
  bool passed = true;
  std::vector<SetPartition> missing_kernels;
  std::vector<SetPartition> missing_cokernels;
  std::vector<int> missing_collapse_ranks;  // no full-domain, positive-codefect element
  std::vector<int> missing_expand_ranks;    // no full-codomain, positive-defect element
};

AuditVerdict audit_necessary_elements(int n, int r, const ElementSet& candidate);

// Structural laws every factorization a = b ⋄ c obeys: a full-domain
// product inherits its first factor's kernel, and when kernels agree and b
// has full codomain, b can be cancelled on the left. Vacuously true when
// neither hypothesis applies.
bool check_factorization_laws(const DifunRelation& a, const DifunRelation& b,
                              const DifunRelation& c);

}  // namespace difun

#endif  // DIFUN_GENERATORS_HPP_
