#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace dgmf {

// A coefficient is a residue in [0, p) for prime fields, or a GMP rational.
using Coeff = std::variant<std::uint64_t, mpq_class>;

class Field {
 public:
  enum class Kind { Prime, Rational };

  static Field prime(std::uint64_t p);
  static Field rationals();

  Kind kind() const { return kind_; }
  // 0 for the rationals.
  std::uint64_t characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(std::int64_t v) const;
  // Non-negative decimal literal.
  Coeff from_decimal(std::string_view digits) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  // Throws DivisionInCoefficient on zero.
  Coeff inv(const Coeff& a) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool equal(const Coeff& a, const Coeff& b) const;

  // Residues print in the symmetric range so that x - 1 stays readable.
  // Returns the absolute value; `negative` reports the sign.
  std::string magnitude(const Coeff& a, bool& negative) const;
  std::string to_string(const Coeff& a) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

}  // namespace dgmf
