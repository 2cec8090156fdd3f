// Certified sign of Re(a) for a in Q(zeta_N).
//
// Re(a(zeta_N)) = sum_j c_j cos(2 pi j / N). The sum is evaluated in
// midpoint-radius form: the midpoint with MPFR at the working precision p
// (round to nearest), the radius with a short MPFR number rounded upward,
// accumulating a bound on every rounding step. If the ball [mid - rad,
// mid + rad] excludes zero the sign is certified; otherwise p doubles.

#include <mpfr.h>

#include "csg/cyclofield.hpp"
#include "csg/errors.hpp"

namespace csg {

namespace {

constexpr mpfr_prec_t kRadiusBits = 64;

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

// rad += |x| * 2^(shift - p), rounded up.
void add_relative_error(Mpfr& rad, mpfr_srcptr x, mpfr_prec_t p, long shift) {
  Mpfr t(kRadiusBits);
  mpfr_abs(t.get(), x, MPFR_RNDU);
  mpfr_mul_2si(t.get(), t.get(), shift - static_cast<long>(p), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), t.get(), MPFR_RNDU);
}

// Returns +1/-1 if the ball certifies the sign at precision p, 0 otherwise.
int try_sign(const CycloElement& a, mpfr_prec_t p) {
  const int n = a.order();
  const auto& coeffs = a.coeffs();

  Mpfr mid(p), rad(kRadiusBits);
  mpfr_set_zero(mid.get(), 1);
  mpfr_set_zero(rad.get(), 1);

  Mpfr pi(p), theta(p), cosine(p), coeff(p), term(p), tmp(kRadiusBits), abs_coeff(kRadiusBits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);

  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;

    // cos(2 pi j / N): |theta~ - theta| < 2^(5-p), cos is 1-Lipschitz and
    // its own rounding adds at most 2^-p; 2^(8-p) covers both with margin.
    mpfr_mul_ui(theta.get(), pi.get(), 2 * static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_div_ui(theta.get(), theta.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_cos(cosine.get(), theta.get(), MPFR_RNDN);

    mpfr_set_q(coeff.get(), coeffs[j].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), coeff.get(), cosine.get(), MPFR_RNDN);

    // Error of the term: |c| * err_cos + |cos| * err_c + err_c * err_cos
    // + rounding of the product, with err_c <= |c~| 2^(1-p), |cos| <= 1.
    mpfr_abs(abs_coeff.get(), coeff.get(), MPFR_RNDU);
    mpfr_mul_2si(tmp.get(), abs_coeff.get(), 9 - static_cast<long>(p), MPFR_RNDU);  // 2 |c| 2^(8-p)
    mpfr_add(rad.get(), rad.get(), tmp.get(), MPFR_RNDU);
    mpfr_mul_2si(tmp.get(), abs_coeff.get(), 2 - static_cast<long>(p), MPFR_RNDU);  // 2 |c| 2^(1-p)
    mpfr_add(rad.get(), rad.get(), tmp.get(), MPFR_RNDU);
    add_relative_error(rad, term.get(), p, 1);

    mpfr_add(mid.get(), mid.get(), term.get(), MPFR_RNDN);
    add_relative_error(rad, mid.get(), p, 1);
  }

  Mpfr bound(p + kRadiusBits);
  mpfr_sub(bound.get(), mid.get(), rad.get(), MPFR_RNDD);
  if (mpfr_sgn(bound.get()) > 0) return 1;
  mpfr_add(bound.get(), mid.get(), rad.get(), MPFR_RNDU);
  if (mpfr_sgn(bound.get()) < 0) return -1;
  return 0;
}

}  // namespace

int sign_real(const CycloElement& a, const SignOptions& options) {
  if (a.is_rational()) return sgn(a.coeffs()[0]);
  if ((a + a.conj()).is_zero()) return 0;
  for (long bits = options.initial_bits; bits <= options.max_bits; bits *= 2) {
    if (const int s = try_sign(a, static_cast<mpfr_prec_t>(bits)); s != 0) return s;
  }
  throw InternalInconsistency("sign_real: precision budget of " + std::to_string(options.max_bits) +
                              " bits exhausted on a nonzero value");
}

}  // namespace csg
