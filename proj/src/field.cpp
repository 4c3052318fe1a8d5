#include "ghw/field.hpp"

#include <algorithm>
#include <sstream>

#include "ghw/error.hpp"
#include "ghw/limits.hpp"

namespace ghw {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree e, comparing coefficient vectors
// from the constant term upward.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f(e + 1, 0);
    f[e] = 1;
    // c0 is the most significant digit of the running index.
    std::uint64_t rest = c;
    for (std::uint32_t i = e; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct Field::Tables {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint32_t> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint32_t> neg;
  std::vector<std::uint16_t> add;  // q*q table, only for small odd-characteristic fields

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }

  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    if (e == 1) {
      const std::uint32_t s = a + b;
      return s >= p ? s - p : s;
    }
    if (!add.empty()) return add[a * q + b];
    return add_digits(a, b);
  }

  // Polynomial product of two encoded elements, reduced by the modulus.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    Poly x(e, 0), y(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      x[i] = a % p;
      a /= p;
      y[i] = b % p;
      b /= p;
    }
    Poly prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      for (std::uint32_t j = 0; j < e; ++j) {
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
      }
    }
    Poly r = e == 1 ? Poly{prod[0]} : poly_mod(prod, modulus, p);
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r.size(); ++i) {
      out += r[i] * scale;
      scale *= p;
    }
    return out;
  }
};

Field Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw DomainError("field order exceeds the supported maximum of " +
                        std::to_string(kMaxFieldOrder));
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = e == 1 ? Poly{0, 1} : smallest_irreducible(p, e);

  t->neg.resize(t->q);
  for (std::uint32_t a = 0; a < t->q; ++a) {
    std::uint32_t out = 0, scale = 1, rest = a;
    for (std::uint32_t i = 0; i < e; ++i) {
      out += ((p - rest % p) % p) * scale;
      rest /= p;
      scale *= p;
    }
    t->neg[a] = out;
  }
  if (p != 2 && e > 1 && t->q <= 256) {
    t->add.resize(static_cast<std::size_t>(t->q) * t->q);
    for (std::uint32_t a = 0; a < t->q; ++a) {
      for (std::uint32_t b = 0; b < t->q; ++b) {
        t->add[a * t->q + b] = static_cast<std::uint16_t>(t->add_digits(a, b));
      }
    }
  }

  // Log/antilog tables from the smallest primitive element.
  const std::uint32_t order = t->q - 1;
  t->exp.assign(2 * static_cast<std::size_t>(std::max<std::uint32_t>(order, 1)), 0);
  t->log.assign(t->q, 0);
  bool found = false;
  for (std::uint32_t g = 1; g < t->q && !found; ++g) {
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    do {
      t->exp[k] = x;
      x = t->slow_mul(x, g);
      ++k;
    } while (x != 1 && k < order);
    if (x == 1 && k == order) found = true;
  }
  if (!found) throw InternalError("no primitive element found");
  for (std::uint32_t k = 0; k < order; ++k) {
    t->exp[k + order] = t->exp[k];
    t->log[t->exp[k]] = k;
  }
  return Field(std::move(t));
}

Field Field::of_order(std::uint32_t q) {
  if (q < 2) throw DomainError("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  return make(p, e);
}

std::uint32_t Field::characteristic() const noexcept { return t_->p; }
std::uint32_t Field::degree() const noexcept { return t_->e; }
std::uint32_t Field::order() const noexcept { return t_->q; }
std::span<const std::uint32_t> Field::modulus() const noexcept { return t_->modulus; }

Elem Field::add(Elem a, Elem b) const noexcept { return Elem{t_->add_code(a.code, b.code)}; }
Elem Field::neg(Elem a) const noexcept { return Elem{t_->neg[a.code]}; }
Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a.code == 0 || b.code == 0) return kZero;
  return Elem{t_->exp[t_->log[a.code] + t_->log[b.code]]};
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw DivisionByZero();
  const std::uint32_t order = t_->q - 1;
  return Elem{t_->exp[(order - t_->log[a.code]) % order]};
}

Elem Field::power_basis(std::uint32_t j) const noexcept {
  std::uint32_t code = 1;
  for (std::uint32_t i = 0; i < j; ++i) code *= t_->p;
  return Elem{code};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(t_->q);
  for (std::uint32_t i = 0; i < t_->q; ++i) out[i] = Elem{i};
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << t_->q << ")";
  if (t_->e > 1) {
    os << " mod ";
    bool first = true;
    for (std::size_t i = t_->modulus.size(); i-- > 0;) {
      const auto c = t_->modulus[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.t_ == b.t_) return true;
  return a.t_->p == b.t_->p && a.t_->e == b.t_->e && a.t_->modulus == b.t_->modulus;
}

FieldElement::FieldElement(Field field, std::uint32_t code) : field_(std::move(field)), value_{code} {
  if (!field_.contains(value_)) {
    throw DomainError("element code " + std::to_string(code) + " out of range for " + field_.describe());
  }
}

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_.inv(value_)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  return FieldElement(a.field_, a.field_.add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  return FieldElement(a.field_, a.field_.sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  return FieldElement(a.field_, a.field_.mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  return FieldElement(a.field_, a.field_.div(a.value_, b.value_));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(value_)); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace ghw
