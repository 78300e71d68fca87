#include "lialg/field.hpp"

#include <charconv>

namespace lialg {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldDescriptor FieldDescriptor::gf(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw BadParameters("GF(p) requires a prime p with 2 <= p < 2^31, got " + std::to_string(p));
    return FieldDescriptor(FieldKind::prime, p);
}

FieldDescriptor FieldDescriptor::rationals() {
    return FieldDescriptor(FieldKind::rationals, 0);
}

std::string FieldDescriptor::str() const {
    return is_prime_field() ? "gf " + std::to_string(p_) : std::string("rat");
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// extended Euclid inverse mod p
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw DivisionByZero("element not invertible mod p");
    return mod_reduce(t, p);
}

} // namespace

Scalar::Scalar(FieldDescriptor f) : field_(f) {}

Scalar Scalar::one(FieldDescriptor f) { return from_int(1, f); }

Scalar Scalar::from_int(std::int64_t v, FieldDescriptor f) {
    Scalar s(f);
    if (f.is_prime_field())
        s.res_ = mod_reduce(v, f.p());
    else
        s.rat_ = v;
    return s;
}

Scalar Scalar::from_rational(Rational r, FieldDescriptor f) {
    if (f.is_prime_field()) {
        BigInt den = denominator(r);
        if (den == 1) {
            BigInt num = numerator(r) % f.p();
            return from_int(static_cast<std::int64_t>(num), f);
        }
        throw RationalLiteralInPrimeField("fraction value in GF(" + std::to_string(f.p()) + ")");
    }
    Scalar s(f);
    s.rat_ = std::move(r); // cpp_rational keeps itself in lowest terms
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? res_ == 0 : rat_.is_zero();
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

std::int64_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw FieldMismatch("residue() on a rational scalar");
    return res_;
}

const Rational& Scalar::rational() const {
    if (field_.is_prime_field()) throw FieldMismatch("rational() on a prime-field scalar");
    return rat_;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("scalars from different fields: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_prime_field())
        s.res_ = mod_reduce(res_ + o.res_, field_.p());
    else
        s.rat_ = rat_ + o.rat_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_prime_field())
        s.res_ = mod_reduce(res_ - o.res_, field_.p());
    else
        s.rat_ = rat_ - o.rat_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_prime_field())
        s.res_ = mod_reduce(res_ * o.res_, field_.p()); // p < 2^31, no overflow
    else
        s.rat_ = rat_ * o.rat_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZero("division by zero");
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_prime_field())
        s.res_ = mod_reduce(-res_, field_.p());
    else
        s.rat_ = -rat_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar s(field_);
    if (field_.is_prime_field())
        s.res_ = mod_inverse(res_, field_.p());
    else
        s.rat_ = Rational(1) / rat_;
    return s;
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = Scalar::one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) return res_ <=> o.res_;
    if (rat_ < o.rat_) return std::strong_ordering::less;
    if (rat_ > o.rat_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(res_);
    std::string s = numerator(rat_).str();
    if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
    return s;
}

Scalar parse_scalar(const std::string& text, FieldDescriptor field) {
    if (text.empty()) throw ParseError("empty scalar literal");
    std::size_t pos = 0;
    bool neg = false;
    if (text[0] == '-') { neg = true; pos = 1; }
    auto read_digits = [&](std::size_t& i) -> BigInt {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("bad scalar literal '" + text + "'");
        return BigInt(text.substr(start, i - start));
    };
    BigInt num = read_digits(pos);
    BigInt den = 1;
    bool has_slash = false;
    if (pos < text.size() && text[pos] == '/') {
        has_slash = true;
        ++pos;
        den = read_digits(pos);
    }
    if (pos != text.size()) throw ParseError("trailing characters in scalar literal '" + text + "'");
    if (neg) num = -num;
    if (den == 0) throw DivisionByZero("zero denominator in scalar literal '" + text + "'");
    if (field.is_prime_field()) {
        if (has_slash)
            throw RationalLiteralInPrimeField("fraction literal '" + text + "' in " + field.str());
        BigInt r = num % field.p();
        if (r < 0) r += field.p();
        return Scalar::from_int(static_cast<std::int64_t>(r), field);
    }
    return Scalar::from_rational(Rational(num) / Rational(den), field);
}

std::string render(const Scalar& s) { return s.str(); }

} // namespace lialg
