#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace tracealg {

enum class FieldKind : uint8_t { rationals, prime_field };

// Coefficient field: Q or F_p with p a prime <= 2^31.
struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    uint32_t characteristic = 0;  // 0 for Q, p for F_p

    static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
    static FieldSpec prime(uint32_t p);

    bool operator==(const FieldSpec&) const = default;
    std::string to_string() const;
};

// Exact field element. Rationals are stored fully reduced with positive
// denominator; prime-field residues are canonical in [0, p).
class Scalar {
public:
    Scalar() = default;  // 0 over Q
    Scalar(const FieldSpec& field, long value);
    Scalar(const FieldSpec& field, const mpq_class& value);

    static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
    static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
    // Parses "a", "-a" or "a/b".
    static Scalar parse(const FieldSpec& field, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // For rationals only.
    const mpq_class& rational() const { return q_; }
    // For prime fields only.
    uint64_t residue() const { return r_; }

    // "a/b" over Q (omitting "/1"), canonical residue digits over F_p.
    std::string to_string() const;

private:
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class q_;      // used when kind == rationals
    uint64_t r_ = 0;   // used when kind == prime_field
};

}  // namespace tracealg
