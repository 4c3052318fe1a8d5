#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ghw {

/// Element of GF(p^e) in its canonical integer encoding: the base-p
/// digits of `code` are the coefficients of the residue polynomial,
/// constant term first.
struct Elem {
  std::uint32_t code = 0;

  constexpr bool is_zero() const noexcept { return code == 0; }
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

/// GF(p^e) with p^e <= 2^16.
///
/// A Field is a cheap-to-copy handle onto immutable arithmetic tables, so
/// it can be passed by value and shared across threads. Raw operations on
/// Elem are unchecked; use FieldElement when operands come from untrusted
/// places.
class Field {
public:
  /// Builds GF(p^e) using the lexicographically smallest monic irreducible
  /// polynomial of degree e (coefficients compared from the constant term
  /// upward). Throws DomainError for non-prime p, e < 1 or p^e > 2^16.
  static Field make(std::uint32_t p, std::uint32_t e = 1);

  /// Accepts a prime power q and factors it. Throws DomainError if q is
  /// not a prime power.
  static Field of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t order() const noexcept;
  /// e+1 coefficients, constant term first; {0, 1} for prime fields.
  std::span<const std::uint32_t> modulus() const noexcept;

  bool contains(Elem a) const noexcept { return a.code < order(); }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Element with code p^j, i.e. the residue of x^j. Together these form
  /// an F_p-basis of the field.
  Elem power_basis(std::uint32_t j) const noexcept;

  /// All elements in code order.
  std::vector<Elem> elements() const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

/// An element bound to its field. Arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
public:
  /// Throws DomainError if code >= field order.
  FieldElement(Field field, std::uint32_t code);

  const Field& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::uint32_t code() const noexcept { return value_.code; }

  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
  FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {}
  Field field_;
  Elem value_;
};

bool is_prime(std::uint32_t n) noexcept;

}  // namespace ghw
