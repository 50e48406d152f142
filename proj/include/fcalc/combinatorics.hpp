#pragma once

// Bracket numbers (unsigned Stirling numbers of the first kind), the signed
// symmetric sums (m;n), and the multi-index recursion S(j_n, ..., j_0) whose
// closed form is a product of bracket numbers.

#include "fcalc/rational.hpp"
#include "fcalc/report.hpp"

#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

namespace fcalc {

/// Memoized bracket numbers [k over j] = (k!/j!) * sum over compositions
/// (i_1, ..., i_j) of k into positive parts of 1/(i_1 ... i_j).
/// Safe for concurrent use.
class BracketTable {
public:
  Integer operator()(unsigned k, unsigned j);

private:
  std::mutex mutex_;
  std::map<std::pair<unsigned, unsigned>, Integer> memo_;
};

/// Bracket number from a process-wide BracketTable.
Integer bracket(unsigned k, unsigned j);
/// Composition-sum evaluation without memoization.
Integer bracket_by_compositions(unsigned k, unsigned j);
/// c(k, j) = c(k-1, j-1) + (k-1) c(k-1, j).
Integer stirling_recurrence(unsigned k, unsigned j);

/// (m;n) = (-1)^m * sum over 0 <= i_1 < ... < i_m <= m+n-1 of i_1 ... i_m.
Integer paren(unsigned m, unsigned n);
/// Elementary symmetric sum e_count(0, 1, ..., upper - 1) by enumeration.
Integer elementary_symmetric(unsigned count, unsigned upper);

/// Memoized S(j_n, ..., j_0). Tuples are written in that order, j_0 last.
/// Safe for concurrent use.
class STable {
public:
  Integer operator()(std::span<const int> tuple);

private:
  Integer eval(const std::vector<int>& tuple);

  std::mutex mutex_;
  std::map<std::vector<int>, Integer> memo_;
};

/// S(j_n, ..., j_0) from a process-wide STable; throws on an empty tuple.
Integer big_s(std::span<const int> tuple);

/// S(j_n, ..., j_0) = prod_{i<n} [j_i over j_{i+1}] on every chain
/// j_0 >= j_1 >= ... >= j_n >= 1 with j_0 <= max_k and 1 <= n <= max_n.
VerifyReport verify_s_product_identity(unsigned max_k, unsigned max_n);

/// S(m,n) = [n over m] = e_{n-m}(0..n-1) for 1 <= m <= n <= max_n, and
/// (m;n) = (-1)^m [m+n over n] for m + n <= max_paren_total.
VerifyReport verify_lubell(unsigned max_n, unsigned max_paren_total = 10);

/// Bracket numbers through the two routes for k, j <= max, plus the row
/// sums sum_j [k over j] = k! for k <= max_row_sum.
VerifyReport verify_bracket_cross_check(unsigned max, unsigned max_row_sum);

}  // namespace fcalc
