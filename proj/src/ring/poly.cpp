#include "dgmf/poly.hpp"

#include <algorithm>
#include <cctype>

#include "dgmf/errors.hpp"

namespace dgmf {

bool Monomial::divides(const Monomial& o) const {
  if (degree > o.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] + o.exp[i];
  r.degree = degree + o.degree;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] - o.exp[i];
  r.degree = degree - o.degree;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.degree += r.exp[i];
  }
  return r;
}

Monomial Monomial::variable(std::size_t i, std::uint16_t e) {
  Monomial r;
  r.exp[i] = e;
  r.degree = e;
  return r;
}

int compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

Ring::Ring(Field field, std::vector<std::string> variables)
    : field_(field), vars_(std::move(variables)) {
  if (vars_.size() > kMaxVars)
    throw InputError("at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const std::string& v = vars_[i];
    bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
    for (char ch : v) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw InputError("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[j] == v) throw InputError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(Field field, std::vector<std::string> variables) {
  return std::make_shared<const Ring>(field, std::move(variables));
}

Poly Poly::constant(const RingPtr& ring, const Coeff& c) {
  Poly p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::from_int(const RingPtr& ring, std::int64_t v) {
  return constant(ring, ring->field().from_int(v));
}

Poly Poly::variable(const RingPtr& ring, std::size_t i) {
  return term(ring, Monomial::variable(i), ring->field().one());
}

Poly Poly::term(const RingPtr& ring, const Monomial& m, const Coeff& c) {
  Poly p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const Field& F = ring->field();
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_grevlex(a.mono, b.mono) > 0;
  });
  Poly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && F.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && F.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

Coeff Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return field().zero();
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree);
  return static_cast<int>(d);
}

Coeff Poly::coeff_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return field().zero();
}

void Poly::check_ring(const Poly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw InputError("polynomials from different rings");
}

namespace {

// Merge two sorted term lists, negating b when subtracting.
std::vector<Term> merge(const Field& F, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare_grevlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? F.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Coeff s = subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (!F.is_zero(s)) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back({b[j].mono, subtract ? F.neg(b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  check_ring(o);
  Poly r(ring_);
  r.terms_ = merge(field(), terms_, o.terms_, false);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_ring(o);
  Poly r(ring_);
  r.terms_ = merge(field(), terms_, o.terms_, true);
  return r;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().neg(t.coeff)});
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  if (terms_.size() == 1) return o.times_term(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1) return times_term(o.terms_[0].mono, o.terms_[0].coeff);
  const Field& F = field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prod));
}

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this - o; }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Coeff& c) const {
  const Field& F = field();
  Poly r(ring_);
  if (F.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, F.mul(t.coeff, c)});
  return r;
}

Poly Poly::times_term(const Monomial& m, const Coeff& c) const {
  const Field& F = field();
  Poly r(ring_);
  if (F.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
  return r;
}

Poly Poly::minus_term_times(const Monomial& m, const Coeff& c, const Poly& o) const {
  Poly r(ring_);
  r.terms_ = merge(field(), terms_, o.times_term(m, c).terms_, true);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = from_int(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading().coeff));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  const Field& F = field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono)) return false;
    if (!F.equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const Field& F = field();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    bool neg = false;
    std::string mag = F.magnitude(t.coeff, neg);
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t v = 0; v < ring_->num_vars(); ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variables()[v];
      if (t.mono.exp[v] > 1) mono += "^" + std::to_string(t.mono.exp[v]);
    }
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

std::pair<Poly, Poly> poly_divide(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionInCoefficient("division by the zero polynomial");
  const RingPtr& R = num.ring();
  const Field& F = R->field();
  const Term& lt = den.leading();
  Coeff lc_inv = F.inv(lt.coeff);
  Poly q(R), rem(R), p = num;
  std::vector<Term> rem_terms;
  std::vector<Term> q_terms;
  while (!p.is_zero()) {
    const Term& t = p.leading();
    if (lt.mono.divides(t.mono)) {
      Monomial m = t.mono / lt.mono;
      Coeff c = F.mul(t.coeff, lc_inv);
      q_terms.push_back({m, c});
      p = p.minus_term_times(m, c, den);
    } else {
      rem_terms.push_back(t);
      p = p - Poly::term(R, t.mono, t.coeff);
    }
  }
  return {Poly::from_terms(R, std::move(q_terms)), Poly::from_terms(R, std::move(rem_terms))};
}

Poly poly_divide_exact(const Poly& num, const Poly& den) {
  auto [q, r] = poly_divide(num, den);
  if (!r.is_zero()) throw NotDivisible(r.to_string());
  return q;
}

}  // namespace dgmf
