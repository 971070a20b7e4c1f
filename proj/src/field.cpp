#include "evp/field.hpp"

#include <numeric>

namespace evp {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::OutOfBoundsValue: return "OutOfBoundsValue";
    case ErrorCode::IndexBeyondHorizon: return "IndexBeyondHorizon";
    case ErrorCode::WordOutsideSpace: return "WordOutsideSpace";
    case ErrorCode::SlalomTooWide: return "SlalomTooWide";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::EnumerationMismatch: return "EnumerationMismatch";
    case ErrorCode::SetTooSmall: return "SetTooSmall";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::IndexOutOfField: return "IndexOutOfField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateBlock: return "DegenerateBlock";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::AmbiguousValue: return "AmbiguousValue";
    case ErrorCode::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorCode::InfeasibleOverFiniteField:
      return "InfeasibleOverFiniteField";
    case ErrorCode::AuditFailure: return "AuditFailure";
    case ErrorCode::HorizonTooShort: return "HorizonTooShort";
    case ErrorCode::IndexOrder: return "IndexOrder";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::HeightExceeded: return "HeightExceeded";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::gf(std::uint64_t p) {
  if (!is_prime(p))
    throw DomainError(ErrorCode::InvalidArgument,
                      "field modulus " + std::to_string(p) + " is not prime");
  FieldDescriptor f;
  f.kind = Kind::PrimeField;
  f.p = p;
  return f;
}

std::string FieldDescriptor::to_string() const {
  return finite() ? "p:" + std::to_string(p) : "q";
}

FieldDescriptor FieldDescriptor::parse(const std::string& s) {
  if (s == "q") return rationals();
  if (s.rfind("p:", 0) == 0) return gf(std::stoull(s.substr(2)));
  throw DomainError(ErrorCode::InvalidArgument,
                    "unrecognized field descriptor: " + s);
}

Scalar Scalar::zero(const FieldDescriptor& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldDescriptor& f) {
  Scalar s;
  s.field_ = f;
  if (f.finite())
    s.res_ = 1 % f.p;
  else
    s.rat_ = 1;
  return s;
}

Scalar Scalar::from_int(const FieldDescriptor& f, std::int64_t v) {
  Scalar s;
  s.field_ = f;
  if (f.finite()) {
    std::int64_t m = v % static_cast<std::int64_t>(f.p);
    if (m < 0) m += static_cast<std::int64_t>(f.p);
    s.res_ = static_cast<std::uint64_t>(m);
  } else {
    s.rat_ = v;
  }
  return s;
}

Scalar Scalar::from_rational(const BigRat& v) {
  Scalar s;
  s.field_ = FieldDescriptor::rationals();
  s.rat_ = v;
  return s;
}

Scalar Scalar::residue(const FieldDescriptor& f, std::uint64_t r) {
  if (!f.finite())
    throw DomainError(ErrorCode::InvalidArgument,
                      "residue constructor requires a prime field");
  Scalar s;
  s.field_ = f;
  s.res_ = r % f.p;
  return s;
}

bool Scalar::is_zero() const {
  return field_.finite() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return field_.finite() ? res_ == 1 % field_.p : rat_ == 1;
}

std::uint64_t Scalar::residue_value() const {
  if (!field_.finite())
    throw DomainError(ErrorCode::InvalidArgument,
                      "residue_value on a rational scalar");
  return res_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw DomainError(ErrorCode::SpecMismatch,
                      "scalar arithmetic across distinct fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.finite())
    s.res_ = (res_ + o.res_) % field_.p;
  else
    s.rat_ = rat_ + o.rat_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.finite())
    s.res_ = (res_ + field_.p - o.res_) % field_.p;
  else
    s.rat_ = rat_ - o.rat_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.finite()) {
    // p fits in 32 bits for every field used here; keep the product exact
    // via __int128 anyway.
    unsigned __int128 prod =
        static_cast<unsigned __int128>(res_) * o.res_;
    s.res_ = static_cast<std::uint64_t>(prod % field_.p);
  } else {
    s.rat_ = rat_ * o.rat_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DomainError(ErrorCode::InvalidArgument, "inverse of zero");
  Scalar s = *this;
  if (field_.finite()) {
    // extended Euclid on (res, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(field_.p),
                 newr = static_cast<std::int64_t>(res_);
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(field_.p);
    s.res_ = static_cast<std::uint64_t>(t);
  } else {
    s.rat_ = BigRat(1) / rat_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.finite())
    s.res_ = res_ == 0 ? 0 : field_.p - res_;
  else
    s.rat_ = -rat_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.finite() ? res_ == o.res_ : rat_ == o.rat_;
}

bool Scalar::operator<(const Scalar& o) const {
  if (field_.finite() != o.field_.finite())
    return field_.finite() < o.field_.finite();
  if (field_.finite()) {
    if (field_.p != o.field_.p) return field_.p < o.field_.p;
    return res_ < o.res_;
  }
  return rat_ < o.rat_;
}

std::string Scalar::to_string() const {
  if (field_.finite())
    return "p:" + std::to_string(field_.p) + ":" + std::to_string(res_);
  std::string num = rat_.str();  // cpp_rational prints n or n/d in lowest terms
  return "q:" + num;
}

Scalar Scalar::parse(const std::string& s) {
  if (s.rfind("q:", 0) == 0) {
    return from_rational(BigRat(s.substr(2)));
  }
  if (s.rfind("p:", 0) == 0) {
    auto second = s.find(':', 2);
    if (second == std::string::npos)
      throw DomainError(ErrorCode::InvalidArgument,
                        "bad scalar literal: " + s);
    FieldDescriptor f = FieldDescriptor::gf(std::stoull(s.substr(2, second - 2)));
    return residue(f, std::stoull(s.substr(second + 1)));
  }
  throw DomainError(ErrorCode::InvalidArgument, "bad scalar literal: " + s);
}

FieldWord restrict_field_word(const FieldWord& w, std::size_t len) {
  return FieldWord(w.begin(), w.begin() + len);
}

std::uint64_t field_size(const FieldDescriptor& f) {
  if (!f.finite())
    throw DomainError(ErrorCode::InvalidArgument, "infinite field");
  return f.p;
}

Scalar enumerate_field(const FieldDescriptor& f, std::uint64_t index) {
  if (f.finite()) {
    if (index >= f.p)
      throw DomainError(ErrorCode::IndexOutOfField,
                        "index " + std::to_string(index) + " >= " +
                            std::to_string(f.p));
    return Scalar::residue(f, index);
  }
  if (index == 0) return Scalar::zero(f);
  // Walk reduced fractions num/den ordered by (num+den, num), two signs each,
  // plus coming before minus.
  std::uint64_t seen = 0;
  for (std::uint64_t total = 2;; ++total) {
    for (std::uint64_t num = 1; num < total; ++num) {
      std::uint64_t den = total - num;
      if (std::gcd(num, den) != 1) continue;
      for (int sign = 0; sign < 2; ++sign) {
        ++seen;
        if (seen == index) {
          BigRat r{BigInt(num), BigInt(den)};
          if (sign == 1) r = -r;
          return Scalar::from_rational(r);
        }
      }
    }
  }
}

}  // namespace evp
