#pragma once

// Arithmetic in the coefficient field F_q, q = p^gamma.
//
// Elements are encoded as small integers: the coordinate vector
// (c_0, ..., c_{gamma-1}) in the power basis 1, u, ..., u^{gamma-1} of the
// modulus maps to the code c_0 + c_1 p + ... + c_{gamma-1} p^{gamma-1}.
// Code order is therefore lexicographic on coordinates with the highest
// power most significant, and codes 0 and 1 are the field's 0 and 1.
// All arithmetic goes through q x q lookup tables built once per context.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqcalc/errors.hpp"

namespace fqcalc {

using Code = std::uint16_t;

class FqContext;
using FieldPtr = std::shared_ptr<const FqContext>;

class FqContext {
 public:
  static constexpr unsigned kMaxOrder = 256;

  /// Field with q elements. Extension fields use the built-in modulus table
  /// (q in {4, 8, 9, 16, 25, 27}); other prime powers fall back to the
  /// lexicographically first monic irreducible polynomial.
  static FieldPtr make(unsigned q);

  /// Explicit construction. `modulus` lists coefficients from degree 0 up and
  /// must be monic of degree gamma and irreducible over F_p.
  static FieldPtr make(unsigned p, unsigned gamma,
                       std::optional<std::vector<unsigned>> modulus = std::nullopt);

  unsigned p() const { return p_; }
  unsigned gamma() const { return gamma_; }
  unsigned q() const { return q_; }
  /// Empty for prime fields.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Code zero() const { return 0; }
  Code one() const { return 1; }

  Code add(Code a, Code b) const { return add_[idx(a, b)]; }
  Code sub(Code a, Code b) const { return add_[idx(a, neg_[b])]; }
  Code neg(Code a) const { return neg_[a]; }
  Code mul(Code a, Code b) const { return mul_[idx(a, b)]; }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;
  /// Image of the integer n under Z -> F_p -> F_q.
  Code from_int(long long n) const;

  std::vector<unsigned> coords(Code a) const;
  Code from_coords(const std::vector<unsigned>& coords) const;

  /// All q elements in code order: 0, 1, ...
  std::vector<Code> elements() const;

  /// Integer for prime fields, polynomial in u ("u+1", "2u^2+u") otherwise.
  std::string to_string(Code a) const;
  Code parse(std::string_view text) const;

  /// Same p, gamma and modulus.
  bool same_as(const FqContext& other) const;

  std::string describe() const;

 private:
  FqContext(unsigned p, unsigned gamma, std::vector<unsigned> modulus);
  std::size_t idx(Code a, Code b) const { return static_cast<std::size_t>(a) * q_ + b; }

  unsigned p_;
  unsigned gamma_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Code> add_;
  std::vector<Code> mul_;
  std::vector<Code> neg_;
  std::vector<Code> inv_;
};

bool is_prime(unsigned n);

/// Monic irreducibility over F_p by trial division against every monic
/// polynomial of degree 1 .. deg/2. Coefficients from degree 0 up.
bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p);

/// Value type for a single element; carries its context.
class FqElement {
 public:
  FqElement(FieldPtr field, Code code);
  static FqElement zero(FieldPtr field) { return {std::move(field), 0}; }
  static FqElement one(FieldPtr field) { return {std::move(field), 1}; }
  static FqElement parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  Code code() const { return code_; }
  std::vector<unsigned> coords() const { return field_->coords(code_); }
  bool is_zero() const { return code_ == 0; }

  FqElement operator+(const FqElement& b) const;
  FqElement operator-(const FqElement& b) const;
  FqElement operator*(const FqElement& b) const;
  FqElement operator/(const FqElement& b) const;
  FqElement operator-() const { return {field_, field_->neg(code_)}; }
  FqElement inv() const;
  FqElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

  bool operator==(const FqElement& b) const;
  std::string to_string() const { return field_->to_string(code_); }

 private:
  void check_same(const FqElement& b) const;

  FieldPtr field_;
  Code code_;
};

std::vector<FqElement> enumerate_fq(const FieldPtr& field);

}  // namespace fqcalc
