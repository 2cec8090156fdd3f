#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored as its coordinate vector in the power basis
// 1, z, ..., z^(phi(N)-1) with z = zeta_N = exp(2 pi i / N), reduced modulo
// the N-th cyclotomic polynomial. The representation is canonical, so two
// elements of the same order are equal iff their coefficient vectors are.
// Binary operations on elements of different orders lift both operands to
// the lcm of the orders first.

#include <complex>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace csg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Euler's totient.
int euler_phi(int n);

/// N-th cyclotomic polynomial, ascending coefficients, monic of degree phi(N).
std::vector<Integer> cyclotomic_polynomial(int order);

namespace detail {
struct CyclotomicRing;
}

class CycloElement {
 public:
  /// Zero of Q = Q(zeta_1).
  CycloElement();
  CycloElement(int value);  // NOLINT(google-explicit-constructor)
  CycloElement(long value);  // NOLINT(google-explicit-constructor)
  CycloElement(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Element of Q(zeta_order) with the given coordinates; vectors longer
  /// than phi(order) are reduced, shorter ones are zero padded.
  CycloElement(int order, std::vector<Rational> coeffs);

  /// zeta_order^exponent; negative exponents are allowed.
  static CycloElement zeta(int order, long exponent = 1);
  /// i = zeta_4.
  static CycloElement imaginary_unit();

  int order() const;
  /// phi(order), the length of coeffs().
  int degree() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Fixed by complex conjugation.
  bool is_real() const;
  /// The rational value; throws PreconditionError when not rational.
  Rational rational_value() const;

  /// Image under zeta_order -> zeta_M^(M/order). Requires order() | M.
  CycloElement embed(int target_order) const;
  /// Complex conjugation, the automorphism z -> z^(N-1).
  CycloElement conj() const;
  /// Multiplicative inverse by the extended Euclidean algorithm modulo Phi_N.
  CycloElement inverse() const;

  CycloElement operator-() const;
  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  CycloElement& operator*=(const CycloElement& rhs);
  CycloElement& operator/=(const CycloElement& rhs);

  friend CycloElement operator+(CycloElement lhs, const CycloElement& rhs) { return lhs += rhs; }
  friend CycloElement operator-(CycloElement lhs, const CycloElement& rhs) { return lhs -= rhs; }
  friend CycloElement operator*(CycloElement lhs, const CycloElement& rhs) { return lhs *= rhs; }
  friend CycloElement operator/(CycloElement lhs, const CycloElement& rhs) { return lhs /= rhs; }

  friend bool operator==(const CycloElement& lhs, const CycloElement& rhs);
  friend bool operator!=(const CycloElement& lhs, const CycloElement& rhs) { return !(lhs == rhs); }

  /// Double precision value at zeta_N = exp(2 pi i / N). Illustrative only.
  std::complex<double> to_complex() const;

 private:
  CycloElement(std::shared_ptr<const detail::CyclotomicRing> ring, std::vector<Rational> coeffs);

  std::shared_ptr<const detail::CyclotomicRing> ring_;
  std::vector<Rational> coeffs_;
};

inline CycloElement conj(const CycloElement& a) { return a.conj(); }
inline CycloElement inv(const CycloElement& a) { return a.inverse(); }
inline CycloElement embed(const CycloElement& a, int target_order) { return a.embed(target_order); }

/// (a + conj a) / 2 in Q(zeta_lcm(N,4)).
CycloElement re(const CycloElement& a);
/// (a - conj a) / (2i) in Q(zeta_lcm(N,4)).
CycloElement im(const CycloElement& a);

/// Least common multiple of the two orders.
int common_order(int a, int b);

struct SignOptions {
  int initial_bits = 64;
  int max_bits = 1 << 16;
};

/// Exact sign of Re(a). Zero is decided by exact comparison; a nonzero
/// sign by ball evaluation at zeta_N with doubling precision. Throws
/// InternalInconsistency if the precision cap is reached.
int sign_real(const CycloElement& a, const SignOptions& options = {});

/// Sign of Re(a) - Re(b).
inline int compare_real(const CycloElement& a, const CycloElement& b) { return sign_real(a - b); }

/// Canonical serialization in the coordinate grammar: ascending powers,
/// zero terms omitted, "0" for zero. The element is written in its own
/// order unless `as_order` (a multiple of it) is given.
std::string to_string(const CycloElement& a, int as_order = 0);

inline std::ostream& operator<<(std::ostream& os, const CycloElement& a) { return os << to_string(a); }

/// Parses an expression of the coordinate grammar as an element of
/// Q(zeta_order). `line` and `column` locate the text for error messages.
CycloElement parse_cyclo(std::string_view text, int order, int line = 1, int column = 1);

}  // namespace csg
