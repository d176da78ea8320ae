#include "generators.hpp"

#include <set>

#include "errors.hpp"

namespace difun {

namespace {

void check_spans(const SetPartition& p, const char* what) {
  if (!p.spans_ground_set())
    throw DomainError(std::string(what) + " must partition the whole ground set");
}

std::vector<int> identity_pairing(int k) {
  std::vector<int> pairing(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pairing[static_cast<std::size_t>(i)] = i;
  return pairing;
}

}  // namespace

DifunRelation lambda_rel(const SetPartition& p) {
  check_spans(p, "lambda's partition");
  const int k = p.block_count();
  return DifunRelation::make(p, SetPartition::singletons(p.n(), k),
                             identity_pairing(k));
}

DifunRelation rho_rel(const SetPartition& p) {
  check_spans(p, "rho's partition");
  const int k = p.block_count();
  return DifunRelation::make(SetPartition::singletons(p.n(), k), p,
                             identity_pairing(k));
}

DifunRelation phi_rel(const SetPartition& p, const SetPartition& q) {
  if (p.n() != q.n())
    throw DimensionError("phi's partitions live on different ground sets");
  check_spans(p, "phi's source partition");
  check_spans(q, "phi's target partition");
  if (p.block_count() != q.block_count())
    throw DomainError("phi needs equally many blocks on both sides");
  return DifunRelation::make(p, q, identity_pairing(p.block_count()));
}

ElementSet sigma_k(int n, int k) {
  if (k < 1 || k > n - 1)
    throw DomainError("chain sets exist for 1 <= k <= n-1");
  auto parts = enumerate_partitions(n, full_mask(n), k);
  std::vector<DifunRelation> out;
  out.reserve(parts.size() + 1);
  for (std::size_t l = 0; l + 1 < parts.size(); ++l)
    out.push_back(phi_rel(parts[l], parts[l + 1]));
  out.push_back(lambda_rel(parts.back()));
  out.push_back(rho_rel(parts.front()));
  return ElementSet(std::move(out));
}

ElementSet lambda_family(int n, int max_blocks) {
  std::vector<DifunRelation> out;
  for (int k = 1; k <= max_blocks && k <= n; ++k)
    for (const auto& p : enumerate_partitions(n, full_mask(n), k))
      out.push_back(lambda_rel(p));
  return ElementSet(std::move(out));
}

ElementSet rho_family(int n, int max_blocks) {
  std::vector<DifunRelation> out;
  for (int k = 1; k <= max_blocks && k <= n; ++k)
    for (const auto& p : enumerate_partitions(n, full_mask(n), k))
      out.push_back(rho_rel(p));
  return ElementSet(std::move(out));
}

ElementSet build_ideal_generators(int n, int r) {
  if (r < 1 || r > n) throw DomainError("ideal generators need 1 <= r <= n");
  auto top = enumerate_j_class(n, r);
  std::vector<DifunRelation> out = top.items();
  for (int k = 1; k < r; ++k) {
    const auto& chain = sigma_k(n, k);
    out.insert(out.end(), chain.begin(), chain.end());
  }
  return ElementSet(std::move(out));
}

Decomposition decompose(const DifunRelation& a, int r) {
  if (r < 1 || r > a.n()) throw DomainError("decomposition level needs 1 <= r <= n");
  if (a.rank() >= r)
    throw DomainError("decompose needs rank(a) < r");
  const int n = a.n();

  auto extend_by_complement = [n](const SetPartition& base, Mask support) {
    std::vector<Mask> blocks = base.blocks();
    const Mask rest = full_mask(n) & ~support;
    if (rest != 0) blocks.push_back(rest);
    return SetPartition::from_masks(n, std::move(blocks));
  };

  SetPartition a_bar = extend_by_complement(a.kernel(), a.dom());
  SetPartition b_bar = extend_by_complement(a.cokernel(), a.codom());

  Decomposition dec{lambda_rel(a_bar),
                    diamond(diamond(rho_rel(a_bar), a), lambda_rel(b_bar)),
                    rho_rel(b_bar)};
  return dec;
}

BigCount relative_rank_formula(int n, int r) {
  if (r < 1 || r > n) throw DomainError("relative rank needs 1 <= r <= n");
  BigCount total = r - 1;
  for (int k = 1; k < r; ++k) total += stirling2(n, k);
  return total;
}

BigCount brandt_rank_formula(int n, int r) {
  if (r < 1 || r > n) throw DomainError("top-class rank needs 1 <= r <= n");
  const int rank_symmetric_group = (r <= 2) ? 1 : 2;
  return BigCount(rank_symmetric_group - 1) +
         BigCount(r + 1) * stirling2(n, r + 1) + stirling2(n, r);
}

RankReport rank_report(int n, int r) {
  if (n < 1) throw DimensionError("reports need a ground set of at least 1");
  if (r < 0 || r > n) throw DomainError("rank must satisfy 0 <= r <= n");

  RankReport report;
  report.n = n;
  report.r = r;
  report.claimed_range = n >= 2;

  report.rho = r + BigCount(r + 1) * stirling2(n, r + 1);
  for (int k = 1; k <= r; ++k) report.rho += stirling2(n, k);
  report.rank = (r == 1 || r == 2) ? report.rho - 1 : report.rho;

  if (r == 0) {
    report.relative_rank = 0;
    report.brandt_rank = 1;  // the zero ideal is its own one-element basis
    report.constructed_set_size = 1;
    return report;
  }

  report.relative_rank = relative_rank_formula(n, r);
  report.brandt_rank = brandt_rank_formula(n, r);

  BigCount top = count_r_classes(n, r) * count_r_classes(n, r);
  for (int i = 2; i <= r; ++i) top *= i;
  report.constructed_set_size = top;
  for (int k = 1; k < r; ++k)
    report.constructed_set_size += stirling2(n, k) + 1;
  return report;
}

AuditVerdict audit_necessary_elements(int n, int r,
                                      const ElementSet& candidate) {
  if (n < 1 || n > kMaxEnumerationSupport)
    throw DimensionError("audit supports 1 <= n <= 12");
  if (r < 0 || r > n) throw DomainError("rank must satisfy 0 <= r <= n");

  std::set<SetPartition> kernels, cokernels;
  std::set<int> collapse_ranks, expand_ranks;
  for (const auto& e : candidate) {
    if (e.n() != n)
      throw DimensionError("candidate element lives on the wrong ground set");
    if (e.rank() > r)
      throw DomainError("candidate element exceeds the ideal's rank");
    kernels.insert(e.kernel());
    cokernels.insert(e.cokernel());
    if (e.defect() == 0 && e.codefect() > 0) collapse_ranks.insert(e.rank());
    if (e.codefect() == 0 && e.defect() > 0) expand_ranks.insert(e.rank());
  }

  AuditVerdict verdict;
  for (int k = 1; k < r; ++k) {
    for (const auto& part : enumerate_partitions(n, full_mask(n), k)) {
      if (!kernels.count(part)) verdict.missing_kernels.push_back(part);
      if (!cokernels.count(part)) verdict.missing_cokernels.push_back(part);
    }
    if (!collapse_ranks.count(k)) verdict.missing_collapse_ranks.push_back(k);
    if (!expand_ranks.count(k)) verdict.missing_expand_ranks.push_back(k);
  }
  verdict.passed = verdict.missing_kernels.empty() &&
                   verdict.missing_cokernels.empty() &&
                   verdict.missing_collapse_ranks.empty() &&
                   verdict.missing_expand_ranks.empty();
  return verdict;
}

bool check_factorization_laws(const DifunRelation& a, const DifunRelation& b,
                              const DifunRelation& c) {
  if (a.n() != b.n() || a.n() != c.n())
    throw DimensionError("factorization factors live on different ground sets");
  bool ok = true;
  if (a.defect() == 0) ok = ok && a.kernel() == b.kernel();
  if (a.kernel() == b.kernel() && b.codefect() == 0)
    ok = ok && diamond(inverse(b), a) == c;
  return ok;
}

}  // namespace difun
