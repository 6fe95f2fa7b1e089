#include "tracealg/scalar.hpp"

#include <stdexcept>

namespace tracealg {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

}  // namespace

FieldSpec FieldSpec::prime(uint32_t p) {
    if (p > (1u << 31) || !is_prime_u32(p))
        throw std::invalid_argument("prime field characteristic must be a prime <= 2^31");
    return {FieldKind::prime_field, p};
}

std::string FieldSpec::to_string() const {
    return kind == FieldKind::rationals ? "Q" : "F" + std::to_string(characteristic);
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
    if (field_.kind == FieldKind::rationals) {
        q_ = value;
    } else {
        long p = static_cast<long>(field_.characteristic);
        long v = value % p;
        if (v < 0) v += p;
        r_ = static_cast<uint64_t>(v);
    }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
    if (field_.kind == FieldKind::rationals) {
        q_ = value;
        q_.canonicalize();
    } else {
        // residue of num/den mod p
        uint64_t p = field_.characteristic;
        mpz_class num = value.get_num(), den = value.get_den();
        uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
        uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
        if (d == 0) throw std::invalid_argument("denominator vanishes modulo p");
        r_ = n * mod_pow(d, p - 2, p) % p;
    }
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Scalar(field, mpq_class(mpz_class(text)));
    mpz_class num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Scalar(field, mpq_class(num, den));
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar out(*this);
    if (field_.kind == FieldKind::rationals) {
        out.q_ += o.q_;
    } else {
        out.r_ = (r_ + o.r_) % field_.characteristic;
    }
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar out(*this);
    if (field_.kind == FieldKind::rationals) {
        out.q_ -= o.q_;
    } else {
        uint64_t p = field_.characteristic;
        out.r_ = (r_ + p - o.r_) % p;
    }
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out(*this);
    if (field_.kind == FieldKind::rationals) {
        out.q_ = -q_;
    } else if (r_ != 0) {
        out.r_ = field_.characteristic - r_;
    }
    return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar out(*this);
    if (field_.kind == FieldKind::rationals) {
        out.q_ *= o.q_;
    } else {
        out.r_ = r_ * o.r_ % field_.characteristic;
    }
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar out(*this);
    if (field_.kind == FieldKind::rationals) {
        out.q_ = 1 / q_;
    } else {
        uint64_t p = field_.characteristic;
        out.r_ = mod_pow(r_, p - 2, p);
    }
    return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.kind == FieldKind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    if (field_.kind == FieldKind::prime_field) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace tracealg
