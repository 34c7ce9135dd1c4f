#include "rowinc/formulas.hpp"

#include <numeric>

#include "rowinc/error.hpp"

namespace rowinc {

std::vector<int> hook_lengths(const Partition& shape) {
  const Partition conj = shape.conjugate();
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(shape.size()));
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      const int arm = shape[r] - c - 1;
      const int leg = conj[c] - r - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

int hook_offset(const Partition& shape) {
  int b = 0;
  for (int r = 0; r < shape.rows(); ++r) b += r * shape[r];
  return b;
}

QPoly q_hook_maj_sum(const Partition& shape) {
  QPoly den = QPoly::constant(1);
  for (int h : hook_lengths(shape)) den *= q_int(h);
  // Hook products always divide [N]!; a DivisibilityError here is a bug.
  return exact_div(q_factorial(shape.size()), den).shifted(hook_offset(shape));
}

namespace {

void require_positive_n(int n) {
  if (n < 1) throw InputError("n must be at least 1");
}

// [2n-k choose k] [2n-2k choose n-k] / [n-k+1], shared by the
// row-increasing closed forms. Zero outside 0 <= k <= n.
QPoly schroeder_core(int n, int k) {
  if (k < 0 || k > n) return {};
  const QPoly num = q_binomial(2 * n - k, k) * q_binomial(2 * n - 2 * k, n - k);
  return exact_div(num, q_int(n - k + 1));
}

}  // namespace

QPoly catalan_maj(int n) {
  require_positive_n(n);
  return exact_div(q_binomial(2 * n, n), q_int(n + 1)).shifted(n);
}

QPoly catalan_amaj(int n) {
  require_positive_n(n);
  return exact_div(q_binomial(2 * n, n), q_int(n + 1));
}

QPoly increasing_maj(int n, int k) {
  require_positive_n(n);
  if (k < 0 || k > n - 1) return {};
  const QPoly num = q_binomial(n - 1, k) * q_binomial(2 * n - k, n);
  return exact_div(num, q_int(n + 1)).shifted(n + k * (k + 1) / 2);
}

QPoly row_increasing_maj(int n, int k) {
  require_positive_n(n);
  if (k < 0 || k > n) return {};
  // n + k(k-3)/2 >= 0 for n >= 1 and 0 <= k <= n; k(k-3) is always even.
  return schroeder_core(n, k).shifted(n + k * (k - 3) / 2);
}

QPoly row_increasing_amaj(int n, int k) {
  require_positive_n(n);
  if (k < 0 || k > n) return {};
  return schroeder_core(n, k).shifted(k * (k - 1) / 2);
}

QPoly row_increasing_maj_recurrence(int n, int k) {
  if (!(1 <= k && k < n)) {
    throw InputError("recurrence needs 1 <= k < n (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  const QPoly head = increasing_maj(n, k) + increasing_maj(n, k - 1);
  const QPoly tail = increasing_maj(n - 1, k - 1) + increasing_maj(n - 1, k - 2);
  const QPoly factor = QPoly::constant(1) - QPoly::monomial(2 * n - k);
  return head + factor * tail;
}

std::int64_t binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (int i = 1; i <= b; ++i) {
    // r = C(a-b+i-1, i-1); i / gcd(r, i) divides a-b+i, so both factors are exact.
    const std::int64_t g = std::gcd(r, static_cast<std::int64_t>(i));
    try {
      r = checked::mul(r / g, (a - b + i) / (i / g));
    } catch (const OverflowError&) {
      throw OverflowError("binomial coefficient overflows 64 bits");
    }
  }
  return r;
}

namespace {

std::int64_t exact_quotient(std::int64_t num, std::int64_t den) {
  if (num % den != 0) {
    throw DivisibilityError(std::to_string(num) + " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

}  // namespace

std::int64_t count_increasing(int n, int k) {
  require_positive_n(n);
  if (k < 0 || k > n - 1) return 0;
  return exact_quotient(checked::mul(binomial(n - 1, k), binomial(2 * n - k, n)), n + 1);
}

std::int64_t count_row_increasing(int n, int k) {
  require_positive_n(n);
  if (k < 0 || k > n) return 0;
  return exact_quotient(checked::mul(binomial(2 * n - k, k), binomial(2 * n - 2 * k, n - k)),
                        n - k + 1);
}

std::int64_t catalan(int n) {
  if (n < 0) throw InputError("Catalan index must be nonnegative");
  return exact_quotient(binomial(2 * n, n), n + 1);
}

std::int64_t large_schroeder(int n) {
  std::int64_t s = 0;
  for (int k = 0; k <= n; ++k) s = checked::add(s, count_row_increasing(n, k));
  return s;
}

std::int64_t small_schroeder(int n) {
  std::int64_t s = 0;
  for (int k = 0; k < n; ++k) s = checked::add(s, count_increasing(n, k));
  return s;
}

}  // namespace rowinc
