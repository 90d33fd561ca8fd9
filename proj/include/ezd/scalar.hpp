#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "ezd/error.hpp"

namespace ezd {

using Rational = boost::multiprecision::cpp_rational;

// Coefficient field: GF(p) for a prime p < 2^31, or the rationals.
class FieldSpec {
  public:
    static FieldSpec gf(std::uint32_t p) {
        if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "GF(p) requires a prime p >= 2, got " + std::to_string(p));
        return FieldSpec(p);
    }
    static FieldSpec rationals() { return FieldSpec(0); }

    bool is_prime_field() const { return p_ != 0; }
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const FieldSpec& o) const = default;

    std::string name() const { return p_ ? "GF(" + std::to_string(p_) + ")" : "QQ"; }

    static bool is_prime(std::uint64_t n) {
        if (n < 2 || n >= (std::uint64_t{1} << 31)) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

  private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;  // 0 == rationals
};

// An exact field element in canonical form: residue 0..p-1, or a reduced
// rational (cpp_rational keeps the canonical form itself).
class Scalar {
  public:
    Scalar() : Scalar(FieldSpec::rationals()) {}
    explicit Scalar(FieldSpec f) : field_(f) {}

    static Scalar zero(FieldSpec f) { return Scalar(f); }
    static Scalar one(FieldSpec f) { return from_int(f, 1); }
    static Scalar from_int(FieldSpec f, long long n) {
        Scalar s(f);
        if (f.is_prime_field()) {
            long long p = f.characteristic();
            s.r_ = n % p;
            if (s.r_ < 0) s.r_ += p;
        } else {
            s.q_ = n;
        }
        return s;
    }
    static Scalar from_rational(Rational q) {
        Scalar s(FieldSpec::rationals());
        s.q_ = std::move(q);
        return s;
    }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return field_.is_prime_field() ? r_ == 0 : q_.is_zero(); }
    bool is_one() const { return field_.is_prime_field() ? r_ == 1 : q_ == 1; }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_prime_field())
            s.r_ = (r_ + o.r_) % field_.characteristic();
        else
            s.q_ = q_ + o.q_;
        return s;
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_prime_field())
            s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
        else
            s.q_ = -q_;
        return s;
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_prime_field())
            s.r_ = (r_ * o.r_) % field_.characteristic();  // p < 2^31 so the product fits in 64 bits
        else
            s.q_ = q_ * o.q_;
        return s;
    }
    Scalar inverse() const {
        if (is_zero()) throw Error(ErrorKind::BadInput, "inverse of zero");
        Scalar s(field_);
        if (field_.is_prime_field())
            s.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
        else
            s.q_ = 1 / q_;
        return s;
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && (field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_);
    }

    std::string str() const {
        if (field_.is_prime_field()) return std::to_string(r_);
        return q_.str();
    }

    long long residue() const { return r_; }
    const Rational& rational() const { return q_; }

  private:
    void check(const Scalar& o) const {
        if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "scalar field mismatch");
    }
    static long long pow_mod(long long b, long long e, long long p) {
        long long r = 1 % p;
        b %= p;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
        }
        return r;
    }

    FieldSpec field_;
    long long r_ = 0;  // GF(p) residue, canonical 0..p-1
    Rational q_;       // rationals
};

}  // namespace ezd
