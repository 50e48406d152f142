#include "fcalc/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace fcalc {

namespace {

// Sum of 1/(i_1...i_parts) over compositions of `total` into `parts` positive parts.
Rational composition_sum(unsigned total, unsigned parts) {
  if (parts == 0) return total == 0 ? Rational(1) : Rational(0);
  Rational sum = 0;
  for (unsigned first = 1; first + (parts - 1) <= total; ++first)
    sum += composition_sum(total - first, parts - 1) / Rational(first);
  return sum;
}

// Sum of products over increasing `count`-subsets of {lo, ..., upper-1}.
Integer subset_products(unsigned count, unsigned lo, unsigned upper) {
  if (count == 0) return 1;
  Integer sum = 0;
  for (unsigned i = lo; i + count <= upper; ++i)
    sum += Integer(i) * subset_products(count - 1, i + 1, upper);
  return sum;
}

std::string tuple_text(std::span<const int> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

Integer bracket_by_compositions(unsigned k, unsigned j) {
  if (j > k) return 0;
  Rational v = Rational(factorial(k)) / Rational(factorial(j)) * composition_sum(k, j);
  if (!is_integer(v)) throw std::logic_error("bracket number is not an integer");
  return v.get_num();
}

Integer BracketTable::operator()(unsigned k, unsigned j) {
  std::lock_guard lock(mutex_);
  auto it = memo_.find({k, j});
  if (it != memo_.end()) return it->second;
  Integer v = bracket_by_compositions(k, j);
  memo_.emplace(std::pair{k, j}, v);
  return v;
}

Integer bracket(unsigned k, unsigned j) {
  static BracketTable table;
  return table(k, j);
}

Integer stirling_recurrence(unsigned k, unsigned j) {
  std::vector<Integer> row{1};  // row 0
  for (unsigned n = 1; n <= k; ++n) {
    std::vector<Integer> next(n + 1);
    for (unsigned i = 1; i <= n; ++i) {
      next[i] = row[i - 1];
      if (i < row.size()) next[i] += Integer(n - 1) * row[i];
    }
    row = std::move(next);
  }
  return j < row.size() ? row[j] : Integer(0);
}

Integer paren(unsigned m, unsigned n) {
  Integer v = subset_products(m, 0, m + n);
  return m % 2 ? Integer(-v) : v;
}

Integer elementary_symmetric(unsigned count, unsigned upper) {
  return subset_products(count, 0, upper);
}

Integer STable::operator()(std::span<const int> tuple) {
  if (tuple.empty()) throw std::invalid_argument("S needs at least one index");
  std::lock_guard lock(mutex_);
  return eval(std::vector<int>(tuple.begin(), tuple.end()));
}

// S(j_n,...,j_0) = S(j_n-1, ..., j_0-1) + sum_{p<n} (j_p - 1) S(..., j_{p+1}, j_p - 1, ..., j_0 - 1),
// with S(j_n, ..., j_1, 1) = 1 when every index is 1 and 0 otherwise.
// Indices that fall to 0 or below give 0.
Integer STable::eval(const std::vector<int>& t) {
  for (int v : t)
    if (v <= 0) return 0;
  if (t.back() == 1) {
    for (int v : t)
      if (v != 1) return 0;
    return 1;
  }
  if (auto it = memo_.find(t); it != memo_.end()) return it->second;

  // Position q in the tuple holds j_{n-q}.
  std::vector<int> next(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) next[i] = t[i] - 1;
  Integer value = eval(next);
  for (std::size_t q = 1; q < t.size(); ++q) {
    next[q - 1] = t[q - 1];
    if (t[q] != 1) value += Integer(t[q] - 1) * eval(next);
  }
  memo_.emplace(t, value);
  return value;
}

Integer big_s(std::span<const int> tuple) {
  static STable table;
  return table(tuple);
}

VerifyReport verify_s_product_identity(unsigned max_k, unsigned max_n) {
  VerifyReport report;
  STable s;
  for (unsigned n = 1; n <= max_n; ++n) {
    // chain[0] = j_0, ..., chain[n] = j_n, non-increasing.
    std::vector<int> chain(n + 1, 1);
    for (unsigned j0 = 1; j0 <= max_k; ++j0) {
      chain.assign(n + 1, 1);
      chain[0] = static_cast<int>(j0);
      while (true) {
        Integer product = 1;
        for (unsigned i = 0; i < n; ++i)
          product *= bracket(static_cast<unsigned>(chain[i]), static_cast<unsigned>(chain[i + 1]));
        std::vector<int> tuple(chain.rbegin(), chain.rend());
        const Integer lhs = s(tuple);
        ++report.cases;
        if (lhs != product) {
          report.fail("S" + tuple_text(tuple) + " = " + lhs.get_str() + " but bracket product = " +
                      product.get_str());
          return report;
        }
        // Next non-increasing tail below chain[0] in odometer order.
        int pos = static_cast<int>(n);
        while (pos >= 1 && chain[pos] == chain[pos - 1]) --pos;
        if (pos < 1) break;
        ++chain[pos];
        for (unsigned i = pos + 1; i <= n; ++i) chain[i] = 1;
      }
    }
  }
  return report;
}

VerifyReport verify_lubell(unsigned max_n, unsigned max_paren_total) {
  VerifyReport report;
  STable s;
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned m = 1; m <= n; ++m) {
      const int tuple[] = {static_cast<int>(m), static_cast<int>(n)};
      const Integer via_s = s(tuple);
      const Integer via_compositions = bracket_by_compositions(n, m);
      const Integer via_symmetric = elementary_symmetric(n - m, n);
      ++report.cases;
      if (via_s != via_compositions || via_compositions != via_symmetric) {
        report.fail("(m,n) = (" + std::to_string(m) + "," + std::to_string(n) + "): S = " +
                    via_s.get_str() + ", compositions = " + via_compositions.get_str() +
                    ", symmetric sum = " + via_symmetric.get_str());
        return report;
      }
    }
  }
  for (unsigned total = 0; total <= max_paren_total; ++total) {
    for (unsigned m = 0; m <= total; ++m) {
      const unsigned n = total - m;
      const Integer lhs = paren(m, n);
      Integer rhs = bracket(m + n, n);
      if (m % 2) rhs = -rhs;
      ++report.cases;
      if (lhs != rhs) {
        report.fail("(" + std::to_string(m) + ";" + std::to_string(n) + ") = " + lhs.get_str() +
                    " but (-1)^m [m+n over n] = " + rhs.get_str());
        return report;
      }
    }
  }
  return report;
}

VerifyReport verify_bracket_cross_check(unsigned max, unsigned max_row_sum) {
  VerifyReport report;
  for (unsigned k = 0; k <= max; ++k) {
    for (unsigned j = 0; j <= max; ++j) {
      ++report.cases;
      const Integer a = bracket_by_compositions(k, j);
      const Integer b = stirling_recurrence(k, j);
      if (a != b) {
        report.fail("[" + std::to_string(k) + " over " + std::to_string(j) + "]: compositions " +
                    a.get_str() + " vs recurrence " + b.get_str());
        return report;
      }
    }
  }
  for (unsigned k = 0; k <= max_row_sum; ++k) {
    Integer sum = 0;
    for (unsigned j = 0; j <= k; ++j) sum += bracket(k, j);
    ++report.cases;
    if (sum != factorial(k)) {
      report.fail("row " + std::to_string(k) + " sums to " + sum.get_str());
      return report;
    }
  }
  return report;
}

}  // namespace fcalc
