#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgmf/field.hpp"

namespace dgmf {

inline constexpr std::size_t kMaxVars = 12;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  bool is_one() const { return degree == 0; }
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Requires divides(o, *this).
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial variable(std::size_t i, std::uint16_t e = 1);
  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

// Graded reverse lexicographic comparison: -1, 0, 1.
int compare_grevlex(const Monomial& a, const Monomial& b);

class Ring {
 public:
  Ring(Field field, std::vector<std::string> variables);
  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool operator==(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }

 private:
  Field field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> variables);

struct Term {
  Monomial mono;
  Coeff coeff;
};

class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(const RingPtr& ring) { return Poly(ring); }
  static Poly constant(const RingPtr& ring, const Coeff& c);
  static Poly from_int(const RingPtr& ring, std::int64_t v);
  static Poly variable(const RingPtr& ring, std::size_t i);
  static Poly term(const RingPtr& ring, const Monomial& m, const Coeff& c);
  // Terms may be unsorted and contain repeats or zeros.
  static Poly from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  // Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  // Constant coefficient; zero for the zero polynomial.
  Coeff constant_term() const;
  const Term& leading() const { return terms_.front(); }
  // -1 for zero.
  int total_degree() const;
  // Coefficient of a given monomial.
  Coeff coeff_of(const Monomial& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  Poly scaled(const Coeff& c) const;
  Poly times_term(const Monomial& m, const Coeff& c) const;
  // this - c*m*o, the reduction step.
  Poly minus_term_times(const Monomial& m, const Coeff& c, const Poly& o) const;
  Poly pow(unsigned e) const;
  Poly monic() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_ring(const Poly& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly parse_poly(std::string_view text, const RingPtr& ring);

// Exact quotient num/den; throws NotDivisible with the remainder.
Poly poly_divide_exact(const Poly& num, const Poly& den);

// Multivariate division by a single divisor: returns (quotient, remainder).
std::pair<Poly, Poly> poly_divide(const Poly& num, const Poly& den);

}  // namespace dgmf
