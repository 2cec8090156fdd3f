#include <cmath>
#include <complex>
#include <numbers>

#include <mpfr.h>

#include "csg/cyclofield.hpp"
#include "csg/errors.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace csg;
using csg::testing::I;
using csg::testing::random_element;

namespace {

// Independent oracle: expand prod over primitive N-th roots (x - e^{2 pi i k/N})
// in complex doubles and round; exact for the small orders tested.
std::vector<long> cyclotomic_by_roots(int n) {
  std::vector<std::complex<double>> poly{1.0};
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const auto root = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = next;
  }
  std::vector<long> out;
  for (auto c : poly) out.push_back(std::lround(c.real()));
  return out;
}

// Independent oracle for the inverse: solve M v = e_0 where M is the matrix
// of multiplication by a in the power basis, by Gauss-Jordan over Q.
CycloElement inverse_by_linear_solve(const CycloElement& a) {
  const int n = a.degree();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, 0));
  for (int col = 0; col < n; ++col) {
    const CycloElement image = a * CycloElement::zeta(a.order(), col);
    for (int row = 0; row < n; ++row) m[row][col] = image.coeffs()[row];
  }
  m[0][n] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (m[pivot][col] == 0) ++pivot;
    std::swap(m[pivot], m[col]);
    const Rational lead = m[col][col];
    for (auto& v : m[col]) v /= lead;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (int k = 0; k <= n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> coeffs(n);
  for (int row = 0; row < n; ++row) coeffs[row] = m[row][n];
  return CycloElement(a.order(), coeffs);
}

// 700-bit floating evaluation of Re(a(zeta_N)), roughly 210 decimal digits.
int high_precision_sign(const CycloElement& a) {
  mpfr_t sum, term, angle, c;
  mpfr_inits2(700, sum, term, angle, c, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(sum, 1);
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    mpfr_const_pi(angle, MPFR_RNDN);
    mpfr_mul_ui(angle, angle, 2 * j, MPFR_RNDN);
    mpfr_div_ui(angle, angle, a.order(), MPFR_RNDN);
    mpfr_cos(term, angle, MPFR_RNDN);
    mpfr_set_q(c, a.coeffs()[j].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term, term, c, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
  }
  int s = 0;
  if (mpfr_cmp_d(sum, 1e-150) > 0) s = 1;
  if (mpfr_cmp_d(sum, -1e-150) < 0) s = -1;
  mpfr_clears(sum, term, angle, c, static_cast<mpfr_ptr>(nullptr));
  return s;
}

CycloElement omega12() { return CycloElement::zeta(3).embed(12); }

}  // namespace

TEST_SUITE("cyclofield") {
  TEST_CASE("cyclotomic polynomials") {
    auto to_long = [](const std::vector<Integer>& p) {
      std::vector<long> out;
      for (const auto& c : p) out.push_back(c.get_si());
      return out;
    };
    CHECK(to_long(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
    CHECK(to_long(cyclotomic_polynomial(3)) == std::vector<long>{1, 1, 1});
    CHECK(to_long(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 60; ++n) {
      CAPTURE(n);
      CHECK(to_long(cyclotomic_polynomial(n)) == cyclotomic_by_roots(n));
      CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
    }
  }

  TEST_CASE("field arithmetic examples") {
    const CycloElement w = omega12();
    CHECK(w * w * w == CycloElement(1));
    CHECK(w * (w * w) == CycloElement(1));
    CHECK((1 + I()) * (1 - I()) == CycloElement(2));
    const CycloElement w3 = CycloElement::zeta(3);
    CHECK(inv(1 + w3) == -w3);
    CHECK((1 + w3) * (-w3) == CycloElement(1));
    CHECK_THROWS_AS((void)inv(CycloElement(12, {})), DivisionByZero);
    CHECK_THROWS_AS((void)(CycloElement(1) / CycloElement(0)), DivisionByZero);
  }

  TEST_CASE("mixed orders lift to the common field") {
    const CycloElement s = CycloElement::zeta(3) + I();
    CHECK(s.order() == 12);
    CHECK(s == omega12() + CycloElement::zeta(12, 3));
    CHECK(CycloElement(Rational(1, 2)) == CycloElement(Rational(1, 2)).embed(20));
  }

  TEST_CASE("conjugation") {
    CHECK(conj(I()) == -I());
    const CycloElement w = omega12();
    CHECK(conj(w) == w * w);
    CHECK(conj(CycloElement(Rational(3, 2))) == CycloElement(Rational(3, 2)));
    std::mt19937_64 rng(11);
    for (int order : {4, 8, 12, 20, 28}) {
      for (int trial = 0; trial < 20; ++trial) {
        const CycloElement a = random_element(rng, order);
        CHECK((a + conj(a)).is_real());
        CHECK(conj(conj(a)) == a);
      }
    }
  }

  TEST_CASE("real and imaginary parts") {
    const CycloElement w = omega12();
    CHECK(re(w) == CycloElement(Rational(-1, 2)));
    CHECK(im(3 + 2 * I()) == CycloElement(2));
    const CycloElement v = w - w * w;
    CHECK(re(v).is_zero());
    CHECK(im(v) == -I() * v);
    CHECK(im(v).is_real());
    CHECK(re(w).is_real());
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const CycloElement a = random_element(rng, 12);
      CHECK(re(a) + I() * im(a) == a);
    }
  }

  TEST_CASE("embedding") {
    CHECK(CycloElement::zeta(3).embed(12) == CycloElement::zeta(12, 4));
    CHECK(CycloElement(Rational(1, 2)).embed(12).coeffs()[0] == Rational(1, 2));
    CHECK(I().embed(12) == CycloElement::zeta(12, 3));
    CHECK_THROWS_AS((void)I().embed(6), PreconditionError);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const CycloElement a = random_element(rng, 4), b = random_element(rng, 4);
      CHECK((a * b).embed(20) == a.embed(20) * b.embed(20));
      CHECK((a + b).embed(12) == a.embed(12) + b.embed(12));
    }
  }

  TEST_CASE("inverse agrees with the linear-solve oracle") {
    std::mt19937_64 rng(17);
    for (int order : {3, 4, 5, 8, 12, 20}) {
      for (int trial = 0; trial < 10; ++trial) {
        const CycloElement a = random_element(rng, order);
        if (a.is_zero()) continue;
        CHECK(a * inv(a) == CycloElement(1));
        CHECK(inv(a) == inverse_by_linear_solve(a));
      }
    }
  }

  TEST_CASE("sign of real parts") {
    CHECK(sign_real(re(omega12())) == -1);
    CHECK(sign_real(re(I())) == 0);
    CHECK(sign_real(re(CycloElement::zeta(12))) == 1);
    CHECK(sign_real(CycloElement::zeta(12)) == 1);  // non-real input: sign of the real part
    CHECK(sign_real(CycloElement::zeta(5)) == 1);
    CHECK(sign_real(CycloElement::zeta(5, 2)) == -1);
    // tiny but nonzero: cos(2 pi/12) - 866025/1000000 > 0
    CHECK(sign_real(re(CycloElement::zeta(12)) - CycloElement(Rational(866025, 1000000))) == 1);
    CHECK(sign_real(re(CycloElement::zeta(12)) - CycloElement(Rational(866026, 1000000))) == -1);
  }

  TEST_CASE("certified sign matches 200-digit evaluation on random elements") {
    std::mt19937_64 rng(2024);
    const int orders[] = {4, 8, 12, 20, 28, 36};
    int zero_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int order = orders[trial % 6];
      CycloElement a = random_element(rng, order);
      if (trial % 10 == 0) a = a - conj(a);  // real part exactly zero
      const int expected = high_precision_sign(a);
      CAPTURE(to_string(a));
      CHECK(sign_real(a) == expected);
      CHECK((sign_real(re(a)) == 0) == (a + conj(a)).is_zero());
      zero_count += expected == 0;
    }
    CHECK(zero_count >= 100);
  }

  TEST_CASE("sign resolves values that need more than the initial precision") {
    // (cos(2 pi/12) - q) with q a 40-digit truncation of sqrt(3)/2
    const Rational q("8660254037844386467637231707529361834714/10000000000000000000000000000000000000000");
    const CycloElement diff = re(CycloElement::zeta(12)) - CycloElement(q);
    CHECK(sign_real(diff) == 1);
    SignOptions tight;
    tight.max_bits = 64;
    CHECK_THROWS_AS((void)sign_real(diff, tight), InternalInconsistency);
  }

  TEST_CASE("coordinate grammar") {
    const CycloElement a = parse_cyclo("-z^4", 12);
    CHECK(a == -CycloElement::zeta(12, 4));
    CHECK(to_string(a) == "1-z^2");  // z^4 = z^2 - 1 modulo x^4 - x^2 + 1
    CHECK(to_string(CycloElement(12, {})) == "0");
    CHECK(to_string(parse_cyclo("3/6 - 2*z + z^3", 12)) == "1/2-2*z+z^3");
    CHECK(parse_cyclo(" 1 / 2 * z ", 4) == I() * Rational(1, 2));
    CHECK(to_string(I() * Rational(-3, 2)) == "-3/2*z");
    CHECK(to_string(CycloElement(Rational(-7, 3))) == "-7/3");
    CHECK(to_string(I(), 12) == "z^3");
    CHECK_THROWS_AS((void)parse_cyclo("z^12", 12), ParseError);
    CHECK_THROWS_AS((void)parse_cyclo("1/0", 12), ParseError);
    CHECK_THROWS_AS((void)parse_cyclo("2*", 12), ParseError);
    CHECK_THROWS_AS((void)parse_cyclo("", 12), ParseError);
    CHECK_THROWS_AS((void)parse_cyclo("1 2", 12), ParseError);
    try {
      (void)parse_cyclo("1+*z", 12, 3, 10);
      FAIL("expected parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 12);
    }
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const int order = 4 * (1 + trial % 7);
      const CycloElement x = random_element(rng, order);
      CHECK(parse_cyclo(to_string(x), order) == x);
    }
  }
}
