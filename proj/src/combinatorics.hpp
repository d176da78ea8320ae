#ifndef DIFUN_COMBINATORICS_HPP_
#define DIFUN_COMBINATORICS_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "relations.hpp"

namespace difun {

// Exact arithmetic throughout; the rank tables leave 64-bit range well
// before the supported n cap.
using BigCount = boost::multiprecision::cpp_int;

// Largest subset size enumerate_partitions accepts (B(12) ≈ 4.2e6 blocksets).
inline constexpr int kMaxEnumerationSupport = 12;

// Stirling number of the second kind, S(0,0)=1 and S(n,k)=0 for k>n.
BigCount stirling2(int n, int k);

// B(n) = S(n,1)+...+S(n,n); B(0)=1 by the S(0,0) convention.
BigCount bell(int n);

BigCount binomial(int n, int k);

// Number of distinct kernels of rank-r elements: (r+1)S(n,r+1) + S(n,r).
BigCount count_r_classes(int n, int r);

// Same count by choosing the domain first: sum_{k=r}^{n} C(n,k) S(k,r).
BigCount count_r_classes_by_domain(int n, int r);

// All partitions of the subset `support` of {1..n}, in lexicographic order
// of their restricted-growth strings. Part(∅) = {empty partition}.
std::vector<SetPartition> enumerate_partitions(int n, Mask support);

// Partitions into exactly k blocks, in the same RGS order.
std::vector<SetPartition> enumerate_partitions(int n, Mask support, int k);

}  // namespace difun

#endif  // DIFUN_COMBINATORICS_HPP_
