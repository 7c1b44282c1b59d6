#include "faulhaber/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "faulhaber/errors.hpp"
#include "faulhaber/numbers.hpp"

namespace faulhaber {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::identity() { return monomial(Rational(1), 1); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(q);
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational evaluate(const Poly& p, const Rational& x0) {
  mpq_class acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0.raw() + it->raw();
  return Rational(acc);
}

Poly derivative(const Poly& p, unsigned times) {
  std::vector<Rational> c = p.coeffs();
  for (unsigned t = 0; t < times && !c.empty(); ++t) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * Rational(static_cast<long>(i));
    c.pop_back();
  }
  return Poly(std::move(c));
}

Poly antiderivative(const Poly& p) {
  if (p.is_zero()) return Poly();
  std::vector<Rational> c(p.coeffs().size() + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    c[i + 1] = p.coeffs()[i] / Rational(static_cast<long>(i + 1));
  return Poly(std::move(c));
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Poly::constant(*it);
  return acc;
}

Poly shift(const Poly& p, const Rational& c) {
  return compose(p, Poly{c, Rational(1)});
}

Poly scale_argument(const Poly& p, const Rational& c) {
  std::vector<Rational> out = p.coeffs();
  Rational f(1);
  for (auto& a : out) {
    a *= f;
    f *= c;
  }
  return Poly(std::move(out));
}

Poly forward_difference(const Poly& p) { return shift(p, Rational(1)) - p; }

Poly summation_operator(const Poly& p) {
  // x^j maps to sum_{v=1}^{x} v^j, i.e. S_j(x) + x^j for j >= 1 and x for j = 0,
  // where S_j(x) = 1/(j+1) sum_k C(j+1,k) B_k x^{j+1-k}.
  Poly out;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const Rational& a = p.coeffs()[j];
    if (a.is_zero()) continue;
    if (j == 0) {
      out += Poly::monomial(a, 1);
      continue;
    }
    const long jl = static_cast<long>(j);
    std::vector<Rational> s(j + 2);
    for (long k = 0; k <= jl; ++k)
      s[static_cast<std::size_t>(jl + 1 - k)] =
          Rational(binomial(jl + 1, k)) * bernoulli(k) / Rational(jl + 1);
    s[j] += Rational(1);
    out += a * Poly(std::move(s));
  }
  return out;
}

Poly theta(const Poly& p, const Rational& alpha) {
  std::vector<Rational> c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= Rational(1) + alpha * Rational(static_cast<long>(i));
  return Poly(std::move(c));
}

DivResult divide(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("divide: zero divisor");
  std::vector<Rational> r = p.coeffs();
  const int dd = d.degree();
  if (p.degree() < dd) return {Poly(), p};
  std::vector<Rational> q(static_cast<std::size_t>(p.degree() - dd + 1));
  const Rational lead = d.leading();
  for (int i = p.degree(); i >= dd; --i) {
    const Rational t = r[static_cast<std::size_t>(i)] / lead;
    q[static_cast<std::size_t>(i - dd)] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<std::size_t>(i - dd + j)] -= t * d.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_divide(const Poly& p, const Poly& d) {
  DivResult r = divide(p, d);
  if (!r.remainder.is_zero())
    throw IdentityError(Violation::NonzeroRemainder,
                        "(" + to_string(p) + ") / (" + to_string(d) + ") leaves " + to_string(r.remainder));
  return r.quotient;
}

SubstitutionBasis SubstitutionBasis::of(BasisTag tag) {
  switch (tag) {
    case BasisTag::Y: return {tag, Poly{Rational(0), Rational(-1, 2), Rational(1, 2)}};
    case BasisTag::U: return {tag, Poly{0, -1, 1}};
    case BasisTag::Xi: return {tag, Poly{0, 1, -1}};
    case BasisTag::Omega: return {tag, Poly{1, -4, 4}};
  }
  throw std::invalid_argument("SubstitutionBasis: unknown tag");
}

const char* to_string(BasisTag tag) noexcept {
  switch (tag) {
    case BasisTag::Y: return "y";
    case BasisTag::U: return "u";
    case BasisTag::Xi: return "xi";
    case BasisTag::Omega: return "omega";
  }
  return "?";
}

Poly rebase_quadratic(const Poly& p, const Poly& q) {
  if (q.degree() != 2) throw std::invalid_argument("rebase_quadratic: basis must be quadratic");
  if (p.is_zero()) return Poly();
  if (p.degree() % 2 != 0)
    throw IdentityError(Violation::NotInBasis, "odd degree " + std::to_string(p.degree()));
  const std::size_t top = static_cast<std::size_t>(p.degree() / 2);
  std::vector<Poly> powers{Poly::constant(1)};
  for (std::size_t k = 1; k <= top; ++k) powers.push_back(powers.back() * q);

  Poly rest = p;
  std::vector<Rational> c(top + 1);
  for (std::size_t k = top + 1; k-- > 0;) {
    c[k] = rest.coeff(2 * k) / powers[k].leading();
    if (!c[k].is_zero()) rest -= c[k] * powers[k];
  }
  if (!rest.is_zero())
    throw IdentityError(Violation::NotInBasis, "residual " + to_string(rest) + " in basis " + to_string(q));
  return Poly(std::move(c));
}

Poly rebase_quadratic(const Poly& p, const SubstitutionBasis& basis) {
  return rebase_quadratic(p, basis.quadratic);
}

const char* to_string(PalindromeClass c) noexcept {
  switch (c) {
    case PalindromeClass::Palindromic: return "palindromic";
    case PalindromeClass::AntiPalindromic: return "anti-palindromic";
    case PalindromeClass::QuasiPalindromic: return "quasi-palindromic";
    case PalindromeClass::None: return "none";
  }
  return "?";
}

PalindromeClass palindrome_class(const Poly& p, int n) {
  if (n < 0 || n < p.degree()) throw std::domain_error("palindrome_class: n below degree");
  bool pal = true, anti = true, quasi = true;
  for (int v = 0; v <= n; ++v) {
    const Rational a = p.coeff(static_cast<std::size_t>(v));
    const Rational b = p.coeff(static_cast<std::size_t>(n - v));
    pal = pal && a == b;
    anti = anti && a == -b;
    quasi = quasi && abs(a) == abs(b);
  }
  if (pal) return PalindromeClass::Palindromic;
  if (anti) return PalindromeClass::AntiPalindromic;
  if (quasi) return PalindromeClass::QuasiPalindromic;
  return PalindromeClass::None;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rational(1)) {
      os << mag;
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace faulhaber
