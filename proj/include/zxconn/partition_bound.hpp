#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace zxconn {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(std::size_t n, std::size_t k);

// Number of length-n′ binary rows with exactly `lam` maximal runs of 1s:
// C(n′+1, 2λ).
BigInt row_count(std::size_t n_prime, std::size_t lam);

// Same quantity from N(n′,λ) = 2N(n′−1,λ) − N(n′−2,λ) + N(n′−2,λ−1).
BigInt row_count_recurrence(std::size_t n_prime, std::size_t lam);

// table[λ][n′−1] for n′ = 1..max_n_prime and λ = 0..⌈max_n_prime/2⌉.
struct RowCountTable {
  std::size_t max_n_prime = 0;
  std::vector<std::vector<BigInt>> entries;
  std::vector<BigInt> column_sums;
};

RowCountTable row_count_table(std::size_t max_n_prime);

inline constexpr std::size_t kUnboundedPart = std::numeric_limits<std::size_t>::max();

// Streams the ordered tuples (λ₁…λ_d) with 1 ≤ λ_i ≤ max_part and Σλ_i = m
// in lexicographic order.
class RestrictedCompositions {
 public:
  RestrictedCompositions(std::size_t m, std::size_t d, std::size_t max_part = kUnboundedPart);

  // Advances to the next composition; false once exhausted.
  bool next();
  const std::vector<std::size_t>& current() const noexcept { return parts_; }

 private:
  bool fill_from(std::size_t position, std::size_t remaining);

  std::size_t m_;
  std::size_t d_;
  std::size_t max_part_;
  std::vector<std::size_t> parts_;
  bool started_ = false;
  bool done_ = false;
};

// Number of restricted compositions (counted, not enumerated).
BigInt count_restricted_compositions(std::size_t m, std::size_t d, std::size_t max_part);

// N_d = Σ over compositions of m into d parts ≤ ⌊n/2⌋ of Σ_i C(n, 2λ_i).
BigInt n_d(std::size_t n, std::size_t m, std::size_t d);

// Same sum regrouped by partition shape: each partition of m into d parts
// contributes (d! / Π mult!) · Σ_i C(n, 2λ_i).
BigInt n_d_by_shapes(std::size_t n, std::size_t m, std::size_t d);

struct PartitionBoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::map<std::size_t, BigInt> per_depth;  // only nonzero N_d
  BigRational mean_exact;
  double mean = 0.0;
};

// d̄ = Σ d·N_d / Σ N_d over d ∈ [⌈m/⌊n/2⌋⌉, m]. Throws InfeasibleError
// when n < 2 or m < 1.
PartitionBoundReport mean_depth_upper_bound(std::size_t n, std::size_t m);

// p_k(n) via p_k(n) = p_{k−1}(n−1) + p_k(n−k).
BigInt partitions_into_k(std::size_t n, std::size_t k);

// CSV mirrors of the two tables and of the N_d histogram.
std::string row_count_table_csv(const RowCountTable& table);
std::string partition_table_csv(std::size_t max_n);
std::string per_depth_csv(const PartitionBoundReport& report);

}  // namespace zxconn
