#include "thinlab/exact/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "thinlab/error.hpp"

namespace thinlab::exact {
namespace {

void trim(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const Integer& lb = b.leading();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    const Integer lr = r.back();
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[shift + i] -= lr * b.coefficients()[i];
    trim(r);
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim(coeffs_);
}

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim(coeffs_);
}

IntPoly IntPoly::monomial(const Integer& coefficient, std::size_t degree) {
  std::vector<Integer> c(degree + 1);
  c[degree] = coefficient;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::power_minus_one(std::size_t k) {
  std::vector<Integer> c(k + 1);
  c[0] = -1;
  c[k] += 1;
  return IntPoly(std::move(c));
}

Integer IntPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    c.push_back(std::move(q));
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::negated() const {
  std::vector<Integer> c;
  for (const auto& x : coeffs_) c.emplace_back(-x);
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(c));
}

bool operator==(const IntPoly& a, const IntPoly& b) {
  return a.coeffs_.size() == b.coeffs_.size() &&
         std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin());
}

PolyDivision divide_by_monic(const IntPoly& numerator, const IntPoly& monic_divisor) {
  if (!monic_divisor.is_monic()) throw Error(ErrorCode::kNotMonic, "divide_by_monic: divisor not monic");
  const int dd = monic_divisor.degree();
  std::vector<Integer> r(numerator.coefficients().begin(), numerator.coefficients().end());
  const int dn = numerator.degree();
  if (dn < dd) return {IntPoly{}, numerator};
  std::vector<Integer> q(static_cast<std::size_t>(dn - dd + 1));
  for (int i = dn; i >= dd; --i) {
    const Integer lead = r[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(i - dd);
    q[shift] = lead;
    for (int j = 0; j <= dd; ++j)
      r[shift + static_cast<std::size_t>(j)] -= lead * monic_divisor.coefficients()[j];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "exact_quotient: division by zero");
  if (a.is_zero()) return IntPoly{};
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return std::nullopt;
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  for (int i = da; i >= db; --i) {
    const Integer& lead = r[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    Integer f;
    mpz_divexact(f.get_mpz_t(), lead.get_mpz_t(), b.leading().get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(i - db);
    for (int j = 0; j <= db; ++j) r[shift + static_cast<std::size_t>(j)] -= f * b.coefficients()[j];
    q[shift] = std::move(f);
  }
  if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; })) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_part();
  }
  return x.primitive_part();
}

IntPoly pow(const IntPoly& p, unsigned exponent) {
  IntPoly result{1};
  IntPoly base = p;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

IntPoly charpoly(const IntMatrix& m) {
  const std::size_t n = m.dim();
  // c[k] is the coefficient of t^k; c[n] = 1.
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  if (n == 0) return IntPoly(std::move(c));
  IntMatrix acc = IntMatrix::identity(n);  // M_1
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      acc = m * acc;
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    }
    const IntMatrix am = m * acc;
    Integer tr = am.trace();
    Integer coeff;
    mpz_divexact_ui(coeff.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -coeff;
  }
  return IntPoly(std::move(c));
}

}  // namespace thinlab::exact
