#ifndef LIALG_FIELD_HPP
#define LIALG_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "lialg/errors.hpp"

namespace lialg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { prime, rationals };

/// The ground field: GF(p) for a prime p < 2^31, or the rationals.
class FieldDescriptor {
public:
    static FieldDescriptor gf(std::int64_t p);
    static FieldDescriptor rationals();

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::prime; }
    std::int64_t characteristic() const { return is_prime_field() ? p_ : 0; }
    std::int64_t p() const { return p_; }

    std::string str() const;

    bool operator==(const FieldDescriptor&) const = default;

private:
    FieldDescriptor(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::int64_t p_;
};

bool is_prime(std::int64_t n);

/// An exact field element: a residue in [0,p) or a reduced fraction.
/// Immutable in spirit; all operations return fresh values.
class Scalar {
public:
    explicit Scalar(FieldDescriptor f);  // zero of f
    static Scalar zero(FieldDescriptor f) { return Scalar(f); }
    static Scalar one(FieldDescriptor f);
    static Scalar from_int(std::int64_t v, FieldDescriptor f);
    static Scalar from_rational(Rational r, FieldDescriptor f);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    std::int64_t residue() const;   // prime fields only
    const Rational& rational() const; // rationals only

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(std::int64_t e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order used only for canonical tie-breaking, not field structure.
    std::strong_ordering operator<=>(const Scalar& o) const;

    std::string str() const;

private:
    void check_same_field(const Scalar& o) const;
    FieldDescriptor field_;
    std::int64_t res_ = 0; // prime-field residue
    Rational rat_;         // rationals value
};

/// Canonical scalar from the `.lie` text syntax: optional '-', digits,
/// optional '/' digits. Integers reduce mod p in prime fields; a fraction
/// literal in a prime field is rejected.
Scalar parse_scalar(const std::string& text, FieldDescriptor field);

/// Inverse of parse_scalar on canonical forms.
std::string render(const Scalar& s);

} // namespace lialg

#endif
