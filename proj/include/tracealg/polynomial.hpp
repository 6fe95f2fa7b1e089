#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracealg/polyring.hpp"

namespace tracealg {

struct Term {
    Monomial m;
    Scalar c;
};

// Sparse multivariate polynomial. Terms are kept in strictly descending
// monomial order and never carry a zero coefficient.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(PolyRingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(PolyRingPtr ring, Scalar c);
    static Polynomial one(PolyRingPtr ring);
    static Polynomial variable(PolyRingPtr ring, size_t var);
    static Polynomial term(PolyRingPtr ring, Monomial m, Scalar c);
    // Builds from arbitrary (possibly unsorted, repeated) terms.
    static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

    // Text syntax: "3*x^2*y - 1/2*y^3"; '*' may be omitted between factors.
    static Polynomial parse(PolyRingPtr ring, const std::string& text);
    std::string to_string() const;

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }

    const Monomial& leading_monomial() const { return terms_.front().m; }
    const Scalar& leading_coefficient() const { return terms_.front().c; }
    // Coefficient of the constant monomial (zero scalar if absent).
    Scalar constant_coefficient() const;

    // Total (weight 1) degree of the leading monomial under the ring order;
    // -1 for the zero polynomial.
    int64_t degree() const { return terms_.empty() ? -1 : terms_[0].m.deg; }

    // Weighted degree if homogeneous, nullopt otherwise. Zero is homogeneous
    // of every degree; by convention returns 0.
    std::optional<int64_t> homogeneous_degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial scaled(const Scalar& c) const;              // c * this
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial monic() const;                              // divide by leading coeff

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void normalize();  // sort descending, combine, drop zeros

    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

}  // namespace tracealg
