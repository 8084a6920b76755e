#ifndef MATGEN_FIELD_HPP
#define MATGEN_FIELD_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matgen/error.hpp"

namespace matgen {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact rational from a possibly non-normalized pair.
Rat make_rat(const Int& num, const Int& den);

enum class FieldKind { Prime, Extension, Rationals };

/// Description of a ground field. Instances are interned; identity of the
/// `Field` pointer is equality of fields.
struct FieldSpec {
  FieldKind kind;
  std::int64_t p = 0;              // characteristic; 0 for the rationals
  int k = 1;                       // extension degree
  std::vector<std::int64_t> mod;   // monic modulus x^k + mod[k-1] x^{k-1} + ... + mod[0]

  bool finite() const { return kind != FieldKind::Rationals; }
  std::int64_t cardinality() const; // p^k; fails for rationals

  std::string to_string() const;   // "qq" | "gf:p" | "gf:p^k"
};

using Field = const FieldSpec*;

Field rationals();
Field prime_field(std::int64_t p);
Field extension_field(std::int64_t p, int k);

/// Parses "qq" | "gf:p" | "gf:p^k".
Field parse_field(const std::string& s);

/// An exact field element in canonical form.
class Scalar {
public:
  Scalar() : f_(nullptr) {}
  Scalar(Field f, std::int64_t value);           // value mod p, or integer rational
  Scalar(Field f, const Rat& value);             // rationals only

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, std::int64_t v) { return Scalar(f, v); }
  /// Element with the given position in the canonical enumeration order.
  static Scalar from_index(Field f, std::int64_t idx);

  Field field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  /// Position in the canonical enumeration order (finite fields only).
  std::int64_t index() const;
  /// Residue / constant coefficient as an integer (finite fields only).
  std::int64_t residue() const;
  const Rat& rat() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Deterministic total order within one field (enumeration order for finite
  /// fields, numeric order for rationals).
  bool less_than(const Scalar& o) const;

  std::string to_string() const;

private:
  using ExtCoeffs = std::array<std::int64_t, 3>;
  Field f_;
  std::variant<std::int64_t, ExtCoeffs, Rat> v_;

  friend Scalar ext_make(Field f, const ExtCoeffs& c);
  const ExtCoeffs& ext() const { return std::get<ExtCoeffs>(v_); }
};

/// Named dispatch used by the CLI surface.
Scalar field_arith(const std::string& op, const Scalar& a, const Scalar* b);

/// All p^k elements in canonical order. Fails with InfiniteField for qq.
std::vector<Scalar> enumerate_field(Field f);

/// Entry-wise embedding GF(p) -> GF(p^k) (and qq -> qq).
Scalar embed_scalar(const Scalar& s, Field target);

/// Parses "17", "-3", "a/b" or "[c0,c1,...]" relative to the given field.
Scalar parse_scalar(const std::string& s, Field f);

/// Uniform element of a finite field.
Scalar random_scalar(Field f, std::mt19937_64& rng);

// --- dense univariate polynomials, coefficients low to high ---

using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Scalar poly_eval(const Poly& p, const Scalar& x);
int poly_degree(const Poly& p); // -1 for zero
/// Quotient of p by (x - r); remainder must be zero.
Poly poly_div_linear(const Poly& p, const Scalar& r);

/// All roots of p lying in f, with multiplicities, in canonical scalar order.
/// Finite fields are scanned exhaustively; over qq the rational-root candidates
/// are derived from the leading/trailing coefficients. Every root is verified
/// by evaluation and its multiplicity established by repeated division.
std::vector<std::pair<Scalar, int>> find_roots(const Poly& p, Field f);

} // namespace matgen

#endif
