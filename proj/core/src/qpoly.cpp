#include "rowinc/qpoly.hpp"

#include <algorithm>
#include <cstdlib>

#include "rowinc/error.hpp"

namespace rowinc {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

QPoly::QPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(Coeff c) { return QPoly(std::vector<Coeff>{c}); }

QPoly QPoly::monomial(int degree, Coeff c) {
  if (degree < 0) throw InputError("monomial degree must be nonnegative");
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int QPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

QPoly::Coeff QPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

QPoly::Coeff QPoly::at_one() const {
  Coeff s = 0;
  for (Coeff c : coeffs_) s = checked::add(s, c);
  return s;
}

QPoly QPoly::shifted(int power) const {
  if (power < 0) throw InputError("shift power must be nonnegative");
  if (is_zero()) return {};
  std::vector<Coeff> v(static_cast<std::size_t>(power), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] = checked::add(coeffs_[i], rhs.coeffs_[i]);
  }
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] = checked::sub(coeffs_[i], rhs.coeffs_[i]);
  }
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPoly::Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = checked::add(v[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return QPoly(std::move(v));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (Coeff& c : r.coeffs_) c = checked::sub(0, c);
  return r;
}

QPoly exact_div(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw InputError("division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) {
    throw DivisibilityError("nonzero remainder: divisor degree " + std::to_string(den.degree()) +
                            " exceeds dividend degree " + std::to_string(num.degree()));
  }
  const auto d = den.coeffs();
  const QPoly::Coeff lead = d.back();
  std::vector<QPoly::Coeff> rem(num.coeffs().begin(), num.coeffs().end());
  const int qdeg = num.degree() - den.degree();
  std::vector<QPoly::Coeff> quot(static_cast<std::size_t>(qdeg) + 1, 0);
  for (int i = qdeg; i >= 0; --i) {
    const QPoly::Coeff top = rem[static_cast<std::size_t>(i + den.degree())];
    if (top == 0) continue;
    if (top % lead != 0) {
      throw DivisibilityError("quotient coefficient " + std::to_string(top) + "/" +
                              std::to_string(lead) + " is not an integer");
    }
    const QPoly::Coeff c = top / lead;
    quot[static_cast<std::size_t>(i)] = c;
    for (std::size_t j = 0; j < d.size(); ++j) {
      auto& slot = rem[static_cast<std::size_t>(i) + j];
      slot = checked::sub(slot, checked::mul(c, d[j]));
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](QPoly::Coeff c) { return c != 0; })) {
    throw DivisibilityError("nonzero remainder in exact polynomial division");
  }
  return QPoly(std::move(quot));
}

QPoly q_int(int n) {
  if (n < 0) throw InputError("q-integer [n] needs n >= 0");
  return QPoly(std::vector<QPoly::Coeff>(static_cast<std::size_t>(n), 1));
}

QPoly q_factorial(int n) {
  if (n < 0) throw InputError("q-factorial needs n >= 0");
  QPoly r = QPoly::constant(1);
  for (int i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

QPoly q_binomial(int a, int b) {
  if (a < 0) throw InputError("q-binomial needs a >= 0");
  if (b < 0 || b > a) return {};
  b = std::min(b, a - b);
  // row[j] holds [i choose j] for the current i.
  std::vector<QPoly> row(static_cast<std::size_t>(b) + 1);
  row[0] = QPoly::constant(1);
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, b); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
    }
  }
  return row[static_cast<std::size_t>(b)];
}

std::string to_human(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = 0; e <= p.degree(); ++e) {
    const QPoly::Coeff c = p.coeff(e);
    if (c == 0) continue;
    // abs via unsigned to stay defined at INT64_MIN.
    const auto mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace rowinc
