#include "zxconn/partition_bound.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "zxconn/errors.hpp"

namespace zxconn {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt row_count(std::size_t n_prime, std::size_t lam) { return binomial(n_prime + 1, 2 * lam); }

BigInt row_count_recurrence(std::size_t n_prime, std::size_t lam) {
  // rows[r][l] = N(r, l) for l ≤ lam.
  std::vector<std::vector<BigInt>> rows(std::max<std::size_t>(n_prime + 1, 2),
                                        std::vector<BigInt>(lam + 1, 0));
  rows[0][0] = 1;
  rows[1][0] = 1;
  if (lam >= 1) rows[1][1] = 1;
  for (std::size_t r = 2; r <= n_prime; ++r) {
    for (std::size_t l = 0; l <= lam; ++l) {
      rows[r][l] = 2 * rows[r - 1][l] - rows[r - 2][l] + (l >= 1 ? rows[r - 2][l - 1] : BigInt(0));
    }
  }
  return rows[n_prime][lam];
}

RowCountTable row_count_table(std::size_t max_n_prime) {
  if (max_n_prime < 1) throw DomainError("row count table needs max n' >= 1");
  RowCountTable table;
  table.max_n_prime = max_n_prime;
  const std::size_t max_lambda = (max_n_prime + 1) / 2;
  table.entries.assign(max_lambda + 1, std::vector<BigInt>(max_n_prime, 0));
  table.column_sums.assign(max_n_prime, 0);
  for (std::size_t lam = 0; lam <= max_lambda; ++lam) {
    for (std::size_t np = 1; np <= max_n_prime; ++np) {
      table.entries[lam][np - 1] = row_count(np, lam);
      table.column_sums[np - 1] += table.entries[lam][np - 1];
    }
  }
  return table;
}

RestrictedCompositions::RestrictedCompositions(std::size_t m, std::size_t d, std::size_t max_part)
    : m_(m), d_(d), max_part_(std::min(max_part, m)), parts_(d, 0) {
  if (d_ == 0 || m_ < d_ || max_part_ == 0 || m_ > d_ * max_part_) done_ = true;
}

// Fills positions [position, d) with the lexicographically smallest tail
// summing to `remaining`.
bool RestrictedCompositions::fill_from(std::size_t position, std::size_t remaining) {
  for (std::size_t i = position; i < d_; ++i) {
    const std::size_t slots_after = d_ - i - 1;
    const std::size_t cap_after = slots_after * max_part_;
    const std::size_t lo = remaining > cap_after ? remaining - cap_after : 1;
    const std::size_t value = std::max<std::size_t>(lo, 1);
    if (value > max_part_ || value + slots_after > remaining) return false;
    parts_[i] = value;
    remaining -= value;
  }
  return remaining == 0;
}

bool RestrictedCompositions::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!fill_from(0, m_)) done_ = true;
    return !done_;
  }
  // Rightmost position (not the last) that can grow while the tail stays feasible.
  std::size_t tail = parts_[d_ - 1];
  for (std::size_t i = d_ - 1; i-- > 0;) {
    const std::size_t slots_after = d_ - i - 1;
    if (parts_[i] < max_part_ && tail - 1 >= slots_after) {
      ++parts_[i];
      if (fill_from(i + 1, tail - 1)) return true;
      --parts_[i];
    }
    tail += parts_[i];
  }
  done_ = true;
  return false;
}

namespace {

// Advances row[s] = #compositions of s into t parts (each in [1, max_part])
// to t + 1 parts via a sliding window sum.
std::vector<BigInt> next_composition_row(const std::vector<BigInt>& row, std::size_t max_part) {
  std::vector<BigInt> next(row.size(), 0);
  BigInt window = 0;
  for (std::size_t s = 1; s < row.size(); ++s) {
    window += row[s - 1];
    if (s > max_part) window -= row[s - 1 - max_part];
    next[s] = window;
  }
  return next;
}

std::vector<BigInt> composition_row(std::size_t m, std::size_t parts, std::size_t max_part) {
  std::vector<BigInt> row(m + 1, 0);
  row[0] = 1;
  for (std::size_t t = 0; t < parts; ++t) row = next_composition_row(row, max_part);
  return row;
}

// Σ_j weights[j] · row[m − j] for j = 1..min(⌊n/2⌋, m).
BigInt weighted_tail_sum(std::size_t m, const std::vector<BigInt>& row,
                         const std::vector<BigInt>& weights) {
  BigInt sum = 0;
  for (std::size_t j = 1; j < weights.size() && j <= m; ++j) sum += weights[j] * row[m - j];
  return sum;
}

std::vector<BigInt> part_weights(std::size_t n) {
  std::vector<BigInt> w(n / 2 + 1, 0);
  for (std::size_t j = 1; j <= n / 2; ++j) w[j] = binomial(n, 2 * j);
  return w;
}

}  // namespace

BigInt count_restricted_compositions(std::size_t m, std::size_t d, std::size_t max_part) {
  return composition_row(m, d, std::min(max_part, std::max<std::size_t>(m, 1)))[m];
}

BigInt n_d(std::size_t n, std::size_t m, std::size_t d) {
  const std::size_t max_part = n / 2;
  if (max_part == 0 || d == 0 || m == 0) return 0;
  const auto row = composition_row(m, d - 1, max_part);
  return BigInt(d) * weighted_tail_sum(m, row, part_weights(n));
}

namespace {

void shapes(std::size_t remaining, std::size_t slots, std::size_t largest,
            std::vector<std::size_t>& current, const std::function<void()>& emit) {
  if (slots == 0) {
    if (remaining == 0) emit();
    return;
  }
  if (remaining < slots) return;
  for (std::size_t part = std::min(largest, remaining - (slots - 1)); part >= 1; --part) {
    if (part * slots < remaining) break;
    current.push_back(part);
    shapes(remaining - part, slots - 1, part, current, emit);
    current.pop_back();
  }
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

BigInt n_d_by_shapes(std::size_t n, std::size_t m, std::size_t d) {
  const std::size_t max_part = n / 2;
  if (max_part == 0 || d == 0 || m == 0) return 0;
  BigInt total = 0;
  const BigInt d_factorial = factorial(d);
  std::vector<std::size_t> shape;
  shapes(m, d, max_part, shape, [&] {
    BigInt orderings = d_factorial;
    for (std::size_t i = 0; i < shape.size();) {
      std::size_t j = i;
      while (j < shape.size() && shape[j] == shape[i]) ++j;
      orderings /= factorial(j - i);
      i = j;
    }
    BigInt inner = 0;
    for (std::size_t part : shape) inner += binomial(n, 2 * part);
    total += orderings * inner;
  });
  return total;
}

PartitionBoundReport mean_depth_upper_bound(std::size_t n, std::size_t m) {
  const std::size_t max_part = n / 2;
  if (max_part == 0) throw InfeasibleError("no edge fits a row when n < 2");
  if (m == 0) throw InfeasibleError("mean depth is undefined for m = 0");

  PartitionBoundReport report;
  report.n = n;
  report.m = m;
  const auto weights = part_weights(n);
  BigInt numerator = 0;
  BigInt denominator = 0;

  std::vector<BigInt> row(m + 1, 0);
  row[0] = 1;
  const std::size_t min_depth = (m + max_part - 1) / max_part;
  for (std::size_t d = 1; d <= m; ++d) {
    // `row` counts compositions into d − 1 parts here.
    if (d >= min_depth) {
      BigInt count = BigInt(d) * weighted_tail_sum(m, row, weights);
      if (count != 0) {
        numerator += count * d;
        denominator += count;
        report.per_depth.emplace(d, std::move(count));
      }
    }
    row = next_composition_row(row, max_part);
  }
  if (denominator == 0) throw InfeasibleError("no restricted composition exists");
  report.mean_exact = BigRational(numerator, denominator);
  report.mean = report.mean_exact.convert_to<double>();
  return report;
}

BigInt partitions_into_k(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // table[j][s] = p_j(s)
  std::vector<std::vector<BigInt>> table(k + 1, std::vector<BigInt>(n + 1, 0));
  table[0][0] = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t s = j; s <= n; ++s) table[j][s] = table[j - 1][s - 1] + table[j][s - j];
  }
  return table[k][n];
}

std::string row_count_table_csv(const RowCountTable& table) {
  std::ostringstream out;
  out << "lambda";
  for (std::size_t np = 1; np <= table.max_n_prime; ++np) out << ',' << np;
  out << '\n';
  for (std::size_t lam = 0; lam < table.entries.size(); ++lam) {
    out << lam;
    for (const auto& v : table.entries[lam]) out << ',' << v;
    out << '\n';
  }
  out << "sum";
  for (const auto& v : table.column_sums) out << ',' << v;
  out << '\n';
  return out.str();
}

std::string partition_table_csv(std::size_t max_n) {
  std::ostringstream out;
  out << "n";
  for (std::size_t k = 1; k <= max_n; ++k) out << ',' << k;
  out << '\n';
  for (std::size_t n = 1; n <= max_n; ++n) {
    out << n;
    for (std::size_t k = 1; k <= max_n; ++k) out << ',' << partitions_into_k(n, k);
    out << '\n';
  }
  return out.str();
}

std::string per_depth_csv(const PartitionBoundReport& report) {
  std::ostringstream out;
  out << "d,N_d\n";
  for (const auto& [d, count] : report.per_depth) out << d << ',' << count << '\n';
  return out.str();
}

}  // namespace zxconn
