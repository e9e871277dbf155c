#pragma once

// Exact arithmetic over Q(v) and univariate polynomials in u over Q(v).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace affschur {

// Dense polynomial in v with rational coefficients; coeffs()[k] multiplies v^k.
// No trailing zero coefficients are stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpq_class& c);
  static Poly monomial(const mpq_class& c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& lead() const { return c_.back(); }
  // Largest k with v^k dividing the polynomial; 0 for the zero polynomial.
  int valuation() const;
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  Poly shifted_down(int k) const;  // divide by v^k, requires k <= valuation()
  Poly shifted_up(int k) const;    // multiply by v^k
  Poly scaled(const mpq_class& c) const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // Monic greatest common divisor (zero if both are zero).
  static Poly gcd(Poly a, Poly b);

  int compare(const Poly& other) const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Element of Q(v) in canonical form v^shift * num / den with
//   den monic, den(0) != 0, num(0) != 0 and gcd(num, den) = 1.
// The zero element has empty num, shift 0 and den = 1, so equality of values is
// equality of representations.
class FieldElem {
 public:
  FieldElem() : den_(mpq_class(1)) {}
  FieldElem(long c);  // NOLINT(google-explicit-constructor)
  explicit FieldElem(const mpq_class& c);
  static FieldElem from_parts(int shift, Poly num, Poly den);
  // The transcendental v raised to k.
  static FieldElem v_power(int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const { return den_.is_one(); }
  // True when the value lies in Q (no dependence on v).
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()

  int shift() const { return shift_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  FieldElem inverse() const;
  FieldElem pow(long e) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
  // Arbitrary but fixed total order on representations.
  friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.compare(b) < 0; }
  int compare(const FieldElem& other) const;

  // Reduced fraction of integer-coefficient polynomials, e.g. "(v^2-1)/(v)".
  std::string to_string() const;

 private:
  int shift_ = 0;
  Poly num_;
  Poly den_;
};

// The quantum parameter. Either the transcendental v, or v specialized to a
// rational number other than 0 and +-1 (never a root of unity).
class Param {
 public:
  static Param generic();
  static Param specialized(const mpq_class& value);

  bool is_generic() const { return generic_; }
  const FieldElem& v() const { return v_; }
  const FieldElem& v_inv() const { return v_inv_; }
  const FieldElem& v2() const { return v2_; }
  FieldElem v_pow(int k) const;
  std::string describe() const;

 private:
  Param(bool generic, FieldElem v);
  bool generic_ = true;
  FieldElem v_;
  FieldElem v_inv_;
  FieldElem v2_;
};

// Parses a rational expression in v: integers, v, + - * / ^ (integer
// exponents, possibly negative) and parentheses. Occurrences of v are replaced
// by param.v(). Throws ParseError on malformed text.
FieldElem parse_field_elem(std::string_view text, const Param& param = Param::generic());

// Convenience constructor c * v^k.
FieldElem scaled_v_power(const mpq_class& c, int k, const Param& param);

// Polynomial in u over Q(v); coeffs()[s] multiplies u^s.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<FieldElem> coeffs);
  static UPoly constant(const FieldElem& c);
  // 1 - a u
  static UPoly linear_factor(const FieldElem& a);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  FieldElem coeff(int s) const;
  FieldElem constant_term() const { return coeff(0); }

  // p(c u)
  UPoly substitute_scaled(const FieldElem& c) const;
  // Drops all terms of degree > max_degree.
  UPoly truncated(int max_degree) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

  std::vector<std::string> to_strings() const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

// Roots a_i of g(u) = prod (1 - a_i u); expands g^+ and g^-.
struct PlusMinusSeries {
  std::vector<FieldElem> roots;

  // prod (1 - a_i u) as a polynomial in u.
  UPoly expand_plus() const;
  // prod (1 - a_i^{-1} u^{-1}) as a polynomial in u^{-1}: coefficient s
  // multiplies u^{-s}.
  UPoly expand_minus() const;
};

// [s] = (v^s - v^{-s}) / (v - v^{-1}).
FieldElem quantum_integer(int s, const Param& param);
// Gaussian binomial prod_{s=1}^{a} (v^{c-s+1} - v^{-c+s-1}) / (v^s - v^{-s}).
FieldElem quantum_binomial(int c, int a, const Param& param);

// Exact quotient num/den when den divides num, std::nullopt otherwise.
// Both arguments must have constant term 1.
std::optional<UPoly> poly_ratio_if_polynomial(const UPoly& num, const UPoly& den);

}  // namespace affschur
