#include "csg/cyclofield.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "csg/errors.hpp"

namespace csg {

namespace detail {

struct CyclotomicRing {
  int order = 1;
  int degree = 1;
  std::vector<Integer> modulus;              // Phi_N, ascending, monic
  std::vector<std::vector<Integer>> powers;  // z^j mod Phi_N for 0 <= j < N
};

namespace {

using Poly = std::vector<Rational>;

// Reduces p in place modulo the monic integer polynomial `modulus`.
void reduce_monic(Poly& p, const std::vector<Integer>& modulus) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t top = p.size(); top-- > deg;) {
    if (p[top] == 0) continue;
    const Rational lead = p[top];
    const std::size_t shift = top - deg;
    for (std::size_t i = 0; i < deg; ++i) {
      if (modulus[i] != 0) p[shift + i] -= lead * modulus[i];
    }
    p[top] = 0;
  }
  p.resize(deg);
}

std::vector<Integer> compute_cyclotomic(int n, std::map<int, std::vector<Integer>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto divisor = compute_cyclotomic(d, memo);
    const std::size_t dd = divisor.size() - 1;
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t top = num.size(); top-- > dd;) {
      const Integer lead = num[top];
      quot[top - dd] = lead;
      if (lead == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) num[top - dd + i] -= lead * divisor[i];
    }
    num = std::move(quot);
  }
  memo.emplace(n, num);
  return num;
}

std::shared_ptr<const CyclotomicRing> build_ring(int order) {
  static std::map<int, std::vector<Integer>> memo;
  static std::mutex memo_mutex;
  auto ring = std::make_shared<CyclotomicRing>();
  ring->order = order;
  {
    std::lock_guard lock(memo_mutex);
    ring->modulus = compute_cyclotomic(order, memo);
  }
  ring->degree = static_cast<int>(ring->modulus.size()) - 1;
  ring->powers.reserve(order);
  std::vector<Integer> current(ring->degree, 0);
  current[0] = 1;
  for (int j = 0; j < order; ++j) {
    ring->powers.push_back(current);
    // multiply by z
    std::vector<Integer> next(ring->degree, 0);
    const Integer carry = current[ring->degree - 1];
    for (int i = ring->degree - 1; i > 0; --i) next[i] = current[i - 1];
    next[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < ring->degree; ++i) next[i] -= carry * ring->modulus[i];
    }
    current = std::move(next);
  }
  return ring;
}

}  // namespace

std::shared_ptr<const CyclotomicRing> ring_for(int order) {
  if (order < 1) throw PreconditionError("cyclotomic order must be positive");
  static std::map<int, std::shared_ptr<const CyclotomicRing>> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  auto ring = build_ring(order);
  std::lock_guard lock(cache_mutex);
  return cache.emplace(order, std::move(ring)).first->second;
}

}  // namespace detail

using detail::ring_for;

int euler_phi(int n) {
  if (n < 1) throw PreconditionError("euler_phi requires n >= 1");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int order) { return ring_for(order)->modulus; }

int common_order(int a, int b) { return std::lcm(a, b); }

CycloElement::CycloElement() : CycloElement(Rational(0)) {}

CycloElement::CycloElement(int value) : CycloElement(Rational(value)) {}

CycloElement::CycloElement(long value) : CycloElement(Rational(value)) {}

CycloElement::CycloElement(const Rational& value) : ring_(ring_for(1)), coeffs_{value} {}

CycloElement::CycloElement(int order, std::vector<Rational> coeffs) : ring_(ring_for(order)) {
  for (auto& c : coeffs) c.canonicalize();
  if (coeffs.size() > static_cast<std::size_t>(ring_->degree)) {
    detail::reduce_monic(coeffs, ring_->modulus);
  }
  coeffs.resize(ring_->degree, 0);
  coeffs_ = std::move(coeffs);
}

CycloElement::CycloElement(std::shared_ptr<const detail::CyclotomicRing> ring, std::vector<Rational> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

CycloElement CycloElement::zeta(int order, long exponent) {
  auto ring = ring_for(order);
  long e = exponent % order;
  if (e < 0) e += order;
  const auto& pw = ring->powers[e];
  return CycloElement(ring, std::vector<Rational>(pw.begin(), pw.end()));
}

CycloElement CycloElement::imaginary_unit() { return zeta(4, 1); }

int CycloElement::order() const { return ring_->order; }

int CycloElement::degree() const { return ring_->degree; }

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloElement::is_real() const { return conj() == *this; }

Rational CycloElement::rational_value() const {
  if (!is_rational()) throw PreconditionError("element is not rational");
  return coeffs_[0];
}

CycloElement CycloElement::embed(int target_order) const {
  if (target_order < 1 || target_order % order() != 0) {
    throw PreconditionError("embed: target order " + std::to_string(target_order) + " is not a multiple of " +
                            std::to_string(order()));
  }
  if (target_order == order()) return *this;
  auto target = ring_for(target_order);
  const int factor = target_order / order();
  std::vector<Rational> out(target->degree, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& pw = target->powers[j * factor];
    for (int i = 0; i < target->degree; ++i) {
      if (pw[i] != 0) out[i] += coeffs_[j] * pw[i];
    }
  }
  return CycloElement(std::move(target), std::move(out));
}

CycloElement CycloElement::conj() const {
  const int n = order();
  if (n <= 2) return *this;
  std::vector<Rational> out(degree(), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& pw = ring_->powers[(n - static_cast<int>(j)) % n];
    for (int i = 0; i < degree(); ++i) {
      if (pw[i] != 0) out[i] += coeffs_[j] * pw[i];
    }
  }
  return CycloElement(ring_, std::move(out));
}

namespace {

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed).
void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
  poly_trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const Rational lead_inv = 1 / b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() * lead_inv;
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    poly_trim(a);
  }
  rem = std::move(a);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

}  // namespace

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    std::vector<Rational> out(degree(), 0);
    out[0] = 1 / coeffs_[0];
    return CycloElement(ring_, std::move(out));
  }
  // Extended Euclid on (Phi_N, a): track s with s * a == r (mod Phi_N).
  Poly r0(ring_->modulus.begin(), ring_->modulus.end());
  Poly r1 = coeffs_;
  poly_trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (r1.size() != 1) {
    if (r1.empty()) throw InternalInconsistency("inverse: element shares a factor with the cyclotomic polynomial");
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return CycloElement(order(), std::move(s1));
}

CycloElement CycloElement::operator-() const {
  CycloElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  if (order() != rhs.order()) {
    const int n = common_order(order(), rhs.order());
    *this = embed(n);
    return *this += rhs.embed(n);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
  if (order() != rhs.order()) {
    const int n = common_order(order(), rhs.order());
    *this = embed(n);
    return *this -= rhs.embed(n);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& rhs) {
  if (rhs.is_rational()) {
    const Rational s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (order() != rhs.order()) {
    const int n = common_order(order(), rhs.order());
    *this = embed(n);
    return *this *= rhs.embed(n);
  }
  Poly product = poly_mul(coeffs_, rhs.coeffs_);
  if (product.size() > coeffs_.size()) detail::reduce_monic(product, ring_->modulus);
  product.resize(degree(), 0);
  coeffs_ = std::move(product);
  return *this;
}

CycloElement& CycloElement::operator/=(const CycloElement& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CycloElement& lhs, const CycloElement& rhs) {
  if (lhs.order() == rhs.order()) return lhs.coeffs_ == rhs.coeffs_;
  if (lhs.is_rational() && rhs.is_rational()) return lhs.coeffs_[0] == rhs.coeffs_[0];
  const int n = common_order(lhs.order(), rhs.order());
  return lhs.embed(n).coeffs_ == rhs.embed(n).coeffs_;
}

std::complex<double> CycloElement::to_complex() const {
  std::complex<double> sum = 0;
  const double step = 2.0 * std::numbers::pi / order();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    sum += coeffs_[j].get_d() * std::polar(1.0, step * static_cast<double>(j));
  }
  return sum;
}

CycloElement re(const CycloElement& a) {
  const CycloElement lifted = a.embed(common_order(a.order(), 4));
  return (lifted + lifted.conj()) * Rational(1, 2);
}

CycloElement im(const CycloElement& a) {
  const CycloElement lifted = a.embed(common_order(a.order(), 4));
  // (a - conj a) / (2i) = -i (a - conj a) / 2
  return (lifted - lifted.conj()) * CycloElement::imaginary_unit() * Rational(-1, 2);
}

}  // namespace csg
