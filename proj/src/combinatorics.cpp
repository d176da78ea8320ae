#include "combinatorics.hpp"

#include <mutex>
#include <utility>

#include "errors.hpp"

namespace difun {

namespace {

void check_nonnegative(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + " must be nonnegative");
}

}  // namespace

BigCount stirling2(int n, int k) {
  check_nonnegative(n, "n");
  check_nonnegative(k, "k");
  if (k > n) return 0;
  if (n == 0) return 1;  // k == 0 here
  if (k == 0) return 0;

  // Row-by-row table, grown on demand and shared across calls.
  static std::mutex mu;
  static std::vector<std::vector<BigCount>> rows = {{1}};  // rows[0] = {S(0,0)}
  std::scoped_lock lock(mu);
  while (static_cast<int>(rows.size()) <= n) {
    int m = static_cast<int>(rows.size());
    const auto& prev = rows.back();
    std::vector<BigCount> row(m + 1);
    row[0] = 0;
    for (int j = 1; j <= m; ++j) {
      BigCount above = (j < m) ? prev[j] : BigCount(0);
      row[j] = above * j + prev[j - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

BigCount bell(int n) {
  check_nonnegative(n, "n");
  BigCount total = 0;
  for (int k = (n == 0 ? 0 : 1); k <= n; ++k) total += stirling2(n, k);
  return total;
}

BigCount binomial(int n, int k) {
  check_nonnegative(n, "n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigCount count_r_classes(int n, int r) {
  check_nonnegative(n, "n");
  check_nonnegative(r, "r");
  if (r > n) return 0;
  if (r == 0) return 1;  // only the empty relation
  return BigCount(r + 1) * stirling2(n, r + 1) + stirling2(n, r);
}

BigCount count_r_classes_by_domain(int n, int r) {
  check_nonnegative(n, "n");
  check_nonnegative(r, "r");
  if (r > n) return 0;
  if (r == 0) return 1;
  BigCount total = 0;
  for (int k = r; k <= n; ++k) total += binomial(n, k) * stirling2(k, r);
  return total;
}

namespace {

// Walk restricted-growth strings over the elements of `support` in
// increasing order; emit each complete assignment as a SetPartition.
void walk_partitions(int n, const std::vector<int>& elems, std::size_t pos,
                     std::vector<int>& assign, int used, int want_k,
                     std::vector<SetPartition>& out) {
  if (pos == elems.size()) {
    if (want_k >= 0 && used != want_k) return;
    std::vector<Mask> blocks(used, 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
      blocks[assign[i]] |= Mask{1} << (elems[i] - 1);
    out.push_back(SetPartition::from_masks(n, blocks));
    return;
  }
  int remaining = static_cast<int>(elems.size() - pos);
  for (int b = 0; b <= used; ++b) {
    int new_used = used + (b == used ? 1 : 0);
    // Prune: can't reach want_k blocks with what's left.
    if (want_k >= 0 && new_used + remaining - 1 < want_k) continue;
    if (want_k >= 0 && new_used > want_k) break;
    assign[pos] = b;
    walk_partitions(n, elems, pos + 1, assign, new_used, want_k, out);
  }
}

std::vector<SetPartition> enumerate_impl(int n, Mask support, int want_k) {
  if (n < 1 || n > kMaxGroundSet) throw DimensionError("ground set size out of range");
  if (support & ~full_mask(n)) throw DomainError("support extends past the ground set");
  if (popcount(support) > kMaxEnumerationSupport)
    throw DomainError("partition enumeration capped at 12 elements");

  std::vector<int> elems;
  for (int x = 1; x <= n; ++x)
    if (support & (Mask{1} << (x - 1))) elems.push_back(x);

  std::vector<SetPartition> out;
  if (elems.empty()) {
    if (want_k < 0 || want_k == 0) out.push_back(SetPartition::from_masks(n, {}));
    return out;
  }
  if (want_k == 0) return out;

  std::vector<int> assign(elems.size(), 0);
  walk_partitions(n, elems, 0, assign, 0, want_k, out);
  return out;
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(int n, Mask support) {
  return enumerate_impl(n, support, -1);
}

std::vector<SetPartition> enumerate_partitions(int n, Mask support, int k) {
  check_nonnegative(k, "k");
  return enumerate_impl(n, support, k);
}

}  // namespace difun
