#include "affschur/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "affschur/errors.hpp"

namespace affschur {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const mpq_class& c, int k) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<size_t>(k) + 1, mpq_class(0));
  p.c_[k] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return 0;
}

Poly Poly::shifted_down(int k) const {
  Poly p;
  if (k <= 0) return shifted_up(-k);
  if (static_cast<size_t>(k) >= c_.size()) return p;
  p.c_.assign(c_.begin() + k, c_.end());
  return p;
}

Poly Poly::shifted_up(int k) const {
  if (k <= 0 || is_zero()) return k < 0 ? shifted_down(-k) : *this;
  Poly p;
  p.c_.assign(static_cast<size_t>(k), mpq_class(0));
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Poly p = *this;
  for (auto& x : p.c_) x *= c;
  return p;
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  mpq_class inv = 1 / lead();
  return scaled(inv);
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly p;
  const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
  const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
  p.c_ = big.c_;
  for (size_t k = 0; k < small.c_.size(); ++k) p.c_[k] += small.c_[k];
  p.trim();
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  mpq_class t;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      p.c_[i + j] += t;
    }
  }
  p.trim();
  return p;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  q = Poly();
  r = a;
  if (a.degree() < b.degree()) return;
  q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, mpq_class(0));
  mpq_class inv_lead = 1 / b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    mpq_class factor = r.lead() * inv_lead;
    q.c_[shift] = factor;
    for (size_t k = 0; k < b.c_.size(); ++k) r.c_[k + shift] -= factor * b.c_[k];
    r.c_.pop_back();  // leading term cancels exactly
    r.trim();
  }
  q.trim();
}

Poly Poly::gcd(Poly a, Poly b) {
  Poly q, r;
  while (!b.is_zero()) {
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

int Poly::compare(const Poly& other) const {
  if (c_.size() != other.c_.size()) return c_.size() < other.c_.size() ? -1 : 1;
  for (size_t k = c_.size(); k-- > 0;) {
    int c = cmp(c_[k], other.c_[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(long c) : num_(mpq_class(c)), den_(mpq_class(1)) {}

FieldElem::FieldElem(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}

FieldElem FieldElem::v_power(int k) {
  FieldElem e(1);
  e.shift_ = k;
  return e;
}

FieldElem FieldElem::from_parts(int shift, Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("zero denominator in Q(v)");
  FieldElem e;
  if (num.is_zero()) return e;
  int vn = num.valuation();
  int vd = den.valuation();
  num = num.shifted_down(vn);
  den = den.shifted_down(vd);
  shift += vn - vd;
  if (!den.is_one() && den.degree() > 0) {
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      Poly q, r;
      Poly::divmod(num, g, q, r);
      num = std::move(q);
      Poly::divmod(den, g, q, r);
      den = std::move(q);
    }
  }
  if (den.lead() != 1) {
    mpq_class inv = 1 / den.lead();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  e.shift_ = shift;
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  return e;
}

bool FieldElem::is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }

bool FieldElem::is_rational() const {
  return is_zero() || (shift_ == 0 && num_.degree() == 0 && den_.degree() == 0);
}

mpq_class FieldElem::rational_value() const {
  if (is_zero()) return 0;
  return num_.coeffs()[0] / den_.coeffs()[0];
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(v)");
  return from_parts(-shift_, den_, num_);
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result(1);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldElem FieldElem::operator-() const {
  FieldElem e = *this;
  e.num_ = -e.num_;
  return e;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int m = std::min(shift_, o.shift_);
  Poly a = num_.shifted_up(shift_ - m);
  Poly b = o.num_.shifted_up(o.shift_ - m);
  if (den_ == o.den_) {
    if (den_.is_one()) {
      Poly s = a + b;
      if (s.is_zero()) return *this = FieldElem();
      int vs = s.valuation();
      shift_ = m + vs;
      num_ = s.shifted_down(vs);
      return *this;
    }
    return *this = from_parts(m, a + b, den_);
  }
  return *this = from_parts(m, a * o.den_ + b * den_, den_ * o.den_);
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() || b.is_zero()) return FieldElem();
  if (a.den_.is_one() && b.den_.is_one()) {
    FieldElem e;
    e.shift_ = a.shift_ + b.shift_;
    e.num_ = a.num_ * b.num_;
    return e;
  }
  return FieldElem::from_parts(a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_);
}

FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(v)");
  return *this = from_parts(shift_ - o.shift_, num_ * o.den_, den_ * o.num_);
}

int FieldElem::compare(const FieldElem& other) const {
  if (shift_ != other.shift_) return shift_ < other.shift_ ? -1 : 1;
  int c = num_.compare(other.num_);
  if (c != 0) return c;
  return den_.compare(other.den_);
}

namespace {

// Integer-coefficient polynomial text, highest power first.
std::string integer_poly_text(const std::vector<mpz_class>& c) {
  std::ostringstream out;
  bool first = true;
  for (size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    mpz_class mag = abs(c[k]);
    bool neg = c[k] < 0;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? '-' : '+');
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << 'v';
      if (k > 1) out << '^' << k;
    }
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace

std::string FieldElem::to_string() const {
  if (is_zero()) return "0";
  Poly n = num_.shifted_up(std::max(shift_, 0));
  Poly d = den_.shifted_up(std::max(-shift_, 0));
  mpz_class l = 1;
  for (const auto& x : n.coeffs()) l = lcm(l, x.get_den());
  for (const auto& x : d.coeffs()) l = lcm(l, x.get_den());
  std::vector<mpz_class> ni, di;
  mpz_class g = 0;
  for (const auto& x : n.coeffs()) {
    mpq_class y = x * l;
    ni.push_back(y.get_num());
    g = gcd(g, y.get_num());
  }
  for (const auto& x : d.coeffs()) {
    mpq_class y = x * l;
    di.push_back(y.get_num());
    g = gcd(g, y.get_num());
  }
  for (auto& x : ni) x /= g;
  for (auto& x : di) x /= g;
  if (di.size() == 1 && di[0] == 1) return integer_poly_text(ni);
  return "(" + integer_poly_text(ni) + ")/(" + integer_poly_text(di) + ")";
}

// ---------------------------------------------------------------------------
// Param

Param::Param(bool generic, FieldElem v)
    : generic_(generic), v_(std::move(v)), v_inv_(v_.inverse()), v2_(v_ * v_) {}

Param Param::generic() { return Param(true, FieldElem::v_power(1)); }

Param Param::specialized(const mpq_class& value) {
  if (value == 0 || value == 1 || value == -1)
    throw DomainError("v may not be specialized to 0, 1 or -1");
  return Param(false, FieldElem(value));
}

FieldElem Param::v_pow(int k) const {
  if (generic_) return FieldElem::v_power(k);
  return v_.pow(k);
}

std::string Param::describe() const {
  return generic_ ? std::string("v") : "v=" + v_.rational_value().get_str();
}

FieldElem scaled_v_power(const mpq_class& c, int k, const Param& param) {
  return FieldElem(c) * param.v_pow(k);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Param& param) : s_(text), param_(param) {}

  FieldElem parse() {
    FieldElem e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse field element '" + std::string(s_) + "': " + what +
                     " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElem expr() {
    FieldElem e = term();
    for (;;) {
      if (eat('+'))
        e += term();
      else if (eat('-'))
        e -= term();
      else
        return e;
    }
  }
  FieldElem term() {
    FieldElem e = unary();
    for (;;) {
      if (eat('*')) {
        e *= unary();
      } else if (eat('/')) {
        FieldElem d = unary();
        if (d.is_zero()) fail("division by zero");
        e /= d;
      } else {
        return e;
      }
    }
  }
  FieldElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  FieldElem power() {
    FieldElem base = atom();
    if (eat('^')) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else
        eat('+');
      bool paren = eat('(');
      if (paren && eat('-')) neg = !neg;
      long e = integer();
      if (paren && !eat(')')) fail("expected ')'");
      if (base.is_zero() && neg) fail("zero to a negative power");
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  FieldElem atom() {
    skip();
    if (eat('(')) {
      FieldElem e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (pos_ < s_.size() && s_[pos_] == 'v') {
      ++pos_;
      return param_.v();
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number, 'v' or '('");
    return FieldElem(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
  }

  std::string_view s_;
  const Param& param_;
  size_t pos_ = 0;
};

}  // namespace

FieldElem parse_field_elem(std::string_view text, const Param& param) {
  return ExprParser(text, param).parse();
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const FieldElem& c) { return UPoly(std::vector<FieldElem>{c}); }

UPoly UPoly::linear_factor(const FieldElem& a) {
  return UPoly(std::vector<FieldElem>{FieldElem(1), -a});
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem UPoly::coeff(int s) const {
  if (s < 0 || s >= static_cast<int>(c_.size())) return FieldElem();
  return c_[s];
}

UPoly UPoly::substitute_scaled(const FieldElem& c) const {
  UPoly p = *this;
  FieldElem f(1);
  for (auto& x : p.c_) {
    x *= f;
    f *= c;
  }
  p.trim();
  return p;
}

UPoly UPoly::truncated(int max_degree) const {
  UPoly p = *this;
  if (max_degree < 0) return UPoly();
  if (p.c_.size() > static_cast<size_t>(max_degree) + 1) p.c_.resize(max_degree + 1);
  p.trim();
  return p;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly p;
  p.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < a.c_.size(); ++k) p.c_[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) p.c_[k] += b.c_[k];
  p.trim();
  return p;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly p;
  p.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < a.c_.size(); ++k) p.c_[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) p.c_[k] -= b.c_[k];
  p.trim();
  return p;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
  p.trim();
  return p;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial in u");
  q = UPoly();
  r = a;
  if (a.degree() < b.degree()) return;
  q.c_.resize(static_cast<size_t>(a.degree() - b.degree()) + 1);
  FieldElem inv_lead = b.c_.back().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    FieldElem factor = r.c_.back() * inv_lead;
    q.c_[shift] = factor;
    for (size_t k = 0; k < b.c_.size(); ++k) r.c_[k + shift] -= factor * b.c_[k];
    r.c_.pop_back();
    r.trim();
  }
  q.trim();
}

std::vector<std::string> UPoly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// PlusMinusSeries

UPoly PlusMinusSeries::expand_plus() const {
  UPoly p = UPoly::constant(FieldElem(1));
  for (const auto& a : roots) {
    if (a.is_zero()) throw DomainError("zero root in g^+(u)");
    p = p * UPoly::linear_factor(a);
  }
  return p;
}

UPoly PlusMinusSeries::expand_minus() const {
  UPoly p = UPoly::constant(FieldElem(1));
  for (const auto& a : roots) {
    if (a.is_zero()) throw DomainError("zero root in g^-(u)");
    p = p * UPoly::linear_factor(a.inverse());
  }
  return p;
}

// ---------------------------------------------------------------------------
// Quantum numbers

FieldElem quantum_integer(int s, const Param& param) {
  FieldElem numer = param.v_pow(s) - param.v_pow(-s);
  FieldElem denom = param.v() - param.v_inv();
  return numer / denom;
}

FieldElem quantum_binomial(int c, int a, const Param& param) {
  if (a < 0) throw DomainError("quantum binomial with negative lower index");
  FieldElem result(1);
  for (int s = 1; s <= a; ++s) {
    FieldElem numer = param.v_pow(c - s + 1) - param.v_pow(-c + s - 1);
    if (numer.is_zero()) return FieldElem();
    result *= numer / (param.v_pow(s) - param.v_pow(-s));
  }
  return result;
}

std::optional<UPoly> poly_ratio_if_polynomial(const UPoly& num, const UPoly& den) {
  if (!num.constant_term().is_one() || !den.constant_term().is_one())
    throw DomainError("polynomial ratio requires constant terms equal to 1");
  UPoly q, r;
  UPoly::divmod(num, den, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

}  // namespace affschur
