#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "evp/error.hpp"

namespace evp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// GF(p) for a prime p, or the rationals. All arithmetic in this project is
/// exact; there is no numeric tolerance anywhere.
struct FieldDescriptor {
  enum class Kind { PrimeField, Rationals };

  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;  // prime modulus, PrimeField only

  static FieldDescriptor gf(std::uint64_t p);
  static FieldDescriptor rationals() { return FieldDescriptor{}; }

  bool finite() const { return kind == Kind::PrimeField; }

  /// "p:5" or "q".
  std::string to_string() const;
  static FieldDescriptor parse(const std::string& s);

  bool operator==(const FieldDescriptor&) const = default;
};

bool is_prime(std::uint64_t n);

/// An exact field element tagged with its field. GF(p) values are stored as
/// canonical residues, rationals in lowest terms with positive denominator
/// (cpp_rational keeps that form).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const FieldDescriptor& f);
  static Scalar one(const FieldDescriptor& f);
  /// The residue of v in GF(p), or v as a rational.
  static Scalar from_int(const FieldDescriptor& f, std::int64_t v);
  static Scalar from_rational(const BigRat& v);
  static Scalar residue(const FieldDescriptor& f, std::uint64_t r);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint64_t residue_value() const;
  const BigRat& rational_value() const { return rat_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order (field, then value); used for deterministic containers.
  bool operator<(const Scalar& o) const;

  /// "p:3:2" for the residue 2 in GF(3), "q:-1/2" for rationals.
  std::string to_string() const;
  static Scalar parse(const std::string& s);

 private:
  void check_same_field(const Scalar& o) const;

  FieldDescriptor field_;
  std::uint64_t res_ = 0;  // PrimeField payload
  BigRat rat_;             // Rationals payload
};

using FieldWord = std::vector<Scalar>;

FieldWord restrict_field_word(const FieldWord& w, std::size_t len);

/// The normative injective enumeration a_0, a_1, ... of the field.
/// GF(p): a_i is the residue i for i < p (IndexOutOfField beyond).
/// Rationals: a_0 = 0, then +-num/den over reduced fractions ordered by
/// (num+den, num, sign with + first).
Scalar enumerate_field(const FieldDescriptor& f, std::uint64_t index);

/// Number of elements for finite fields.
std::uint64_t field_size(const FieldDescriptor& f);

}  // namespace evp
