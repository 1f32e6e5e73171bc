#pragma once

// Finite fields F_q, q = p^k <= 64, with table-driven arithmetic.
//
// An element is encoded by its polynomial-basis coordinates packed as a
// base-p integer: code = c_0 + c_1 p + ... + c_{k-1} p^{k-1}. That packing is
// also the canonical coordinate order used to pick the generator.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace amzv::ff {

using Code = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A value of F_q. Holds a non-owning pointer to its field; the field must
/// outlive the element.
class Elem {
 public:
  Elem() = default;
  Elem(const Field* field, Code code) : field_(field), code_(code) {}

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  /// Polynomial-basis coordinates, length k, each in [0, p).
  std::vector<int> coords() const;

  /// Exponent j with this == g^j. Throws std::domain_error on zero.
  int log() const;

  Elem inv() const;
  Elem pow(long long n) const;

  friend Elem operator+(Elem a, Elem b);
  friend Elem operator-(Elem a, Elem b);
  friend Elem operator*(Elem a, Elem b);
  friend Elem operator/(Elem a, Elem b);
  Elem operator-() const;

  friend bool operator==(Elem a, Elem b);

 private:
  const Field* field_ = nullptr;
  Code code_ = 0;
};

/// F_q with q = p^k. Immutable after construction.
class Field {
 public:
  /// Builds F_{p^k}. With no modulus, a default irreducible is taken from the
  /// built-in table. Throws std::invalid_argument for non-prime p, q > 64, a
  /// modulus of the wrong degree, a reducible modulus, or a missing default.
  static FieldPtr make(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt);

  /// Accepts "q" (e.g. "9") or "p^k" (e.g. "3^2").
  static FieldPtr from_q_string(std::string_view text);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  /// Monic modulus, ascending coefficients, length k+1.
  const std::vector<int>& modulus() const { return modulus_; }
  bool is_prime() const { return k_ == 1; }

  Elem zero() const { return {this, 0}; }
  Elem one() const { return {this, 1}; }
  Elem generator() const { return {this, gen_}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(long long n) const;
  Elem from_code(Code c) const;
  Elem from_coords(const std::vector<int>& coords) const;
  /// g^j for any integer j.
  Elem from_log(long long j) const;

  /// All elements in code order.
  std::vector<Elem> elements() const;
  /// Nonzero elements in exponent order g^0, g^1, ..., g^{q-2}.
  std::vector<Elem> units() const;

  // Raw table arithmetic on codes, used by the combinatorial kernels.
  Code add(Code a, Code b) const { return add_[a * q_ + b]; }
  Code sub(Code a, Code b) const { return add_[a * q_ + neg_[b]]; }
  Code neg(Code a) const { return neg_[a]; }
  Code mul(Code a, Code b) const { return mul_[a * q_ + b]; }
  Code inv(Code a) const;
  int log(Code a) const;
  Code exp(long long j) const;

  /// "0" for zero, "g^j" for units.
  std::string format(Elem e) const;
  /// Parses "0", "g^j" (0 <= j <= q-2), or a decimal residue for prime fields
  /// (also accepted in any field as an element of the prime subfield).
  Elem parse(std::string_view text) const;

  bool same_as(const Field& other) const;

 private:
  Field(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Code> add_, mul_, neg_, inv_, exp_;
  std::vector<int> log_;
  Code gen_ = 1;
};

/// True when n is prime (trial division).
bool is_prime(int n);

/// Default modulus for (p, k), if the built-in table has one.
std::optional<std::vector<int>> default_modulus(int p, int k);

/// Irreducibility over F_p by trial division against all monics of lower
/// positive degree. Coefficients ascending; leading coefficient must be 1.
bool is_irreducible(const std::vector<int>& poly, int p);

}  // namespace amzv::ff
