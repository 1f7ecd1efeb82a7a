#include "dgmf/field.hpp"

#include "dgmf/errors.hpp"

namespace dgmf {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw InputError("field characteristic must be a prime below 2^32, got " +
                     std::to_string(p));
  return Field(Kind::Prime, p);
}

Field Field::rationals() { return Field(Kind::Rational, 0); }

Coeff Field::zero() const {
  if (kind_ == Kind::Prime) return std::uint64_t{0};
  return mpq_class(0);
}

Coeff Field::one() const {
  if (kind_ == Kind::Prime) return std::uint64_t{1};
  return mpq_class(1);
}

Coeff Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::Prime) {
    std::int64_t p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
  }
  return mpq_class(static_cast<long>(v));
}

Coeff Field::from_decimal(std::string_view digits) const {
  mpz_class z(std::string(digits), 10);
  if (kind_ == Kind::Prime) {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(p_));
    return static_cast<std::uint64_t>(r.get_ui());
  }
  return mpq_class(z);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::Prime) {
    std::uint64_t s = std::get<0>(a) + std::get<0>(b);
    return s >= p_ ? s - p_ : s;
  }
  return mpq_class(std::get<1>(a) + std::get<1>(b));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::Prime) {
    std::uint64_t x = std::get<0>(a), y = std::get<0>(b);
    return x >= y ? x - y : x + p_ - y;
  }
  return mpq_class(std::get<1>(a) - std::get<1>(b));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::Prime) return std::get<0>(a) * std::get<0>(b) % p_;
  return mpq_class(std::get<1>(a) * std::get<1>(b));
}

Coeff Field::neg(const Coeff& a) const {
  if (kind_ == Kind::Prime) {
    std::uint64_t x = std::get<0>(a);
    return x == 0 ? x : p_ - x;
  }
  return mpq_class(-std::get<1>(a));
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw DivisionInCoefficient("division by zero in the coefficient field");
  if (kind_ == Kind::Prime) return pow_mod(std::get<0>(a), p_ - 2, p_);
  return mpq_class(1 / std::get<1>(a));
}

bool Field::is_zero(const Coeff& a) const {
  if (kind_ == Kind::Prime) return std::get<0>(a) == 0;
  return sgn(std::get<1>(a)) == 0;
}

bool Field::is_one(const Coeff& a) const {
  if (kind_ == Kind::Prime) return std::get<0>(a) == 1;
  return std::get<1>(a) == 1;
}

bool Field::equal(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::Prime) return std::get<0>(a) == std::get<0>(b);
  return std::get<1>(a) == std::get<1>(b);
}

std::string Field::magnitude(const Coeff& a, bool& negative) const {
  if (kind_ == Kind::Prime) {
    std::uint64_t x = std::get<0>(a);
    negative = x > p_ / 2;
    return std::to_string(negative ? p_ - x : x);
  }
  const mpq_class& q = std::get<1>(a);
  negative = sgn(q) < 0;
  mpq_class m = abs(q);
  return m.get_str();
}

std::string Field::to_string(const Coeff& a) const {
  bool neg = false;
  std::string m = magnitude(a, neg);
  return neg ? "-" + m : m;
}

}  // namespace dgmf
