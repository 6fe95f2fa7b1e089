#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tracealg/groebner.hpp"

namespace tracealg {

class QuotientRing;
using QRingPtr = std::shared_ptr<const QuotientRing>;

// R = P / J with J held as a reduced Groebner basis. Elements of R are
// represented by their normal forms; equality in R is equality of normal
// forms. J may be empty (R = P itself).
class QuotientRing {
public:
    static QRingPtr make(PolyRingPtr base, const std::vector<Polynomial>& defining,
                         uint32_t degree_cap = 0);

    const PolyRingPtr& base() const { return base_; }
    const GroebnerBasis& defining() const { return defining_; }
    // true iff every defining generator is homogeneous for the ring weights
    bool graded() const { return graded_; }
    const FieldSpec& field() const { return base_->field; }
    size_t nvars() const { return base_->nvars(); }

    Polynomial nf(const Polynomial& f) const { return normal_form(f, defining_); }
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const { return nf(a * b); }
    bool is_zero_elt(const Polynomial& a) const { return nf(a).is_zero(); }

    // finitely many standard monomials <=> Artinian quotient
    bool is_artinian() const;
    // standard monomials in descending ring order; CapError above `cap`
    // entries (cap = 0 means unlimited), std::domain_error if not Artinian.
    std::vector<Monomial> standard_monomials(size_t cap = 0) const;
    size_t dimension_over_k(size_t cap = 0) const { return standard_monomials(cap).size(); }

    // units: nonzero constant part plus nilpotent rest
    bool is_unit(const Polynomial& a) const;
    Polynomial invert_unit(const Polynomial& a) const;

    Polynomial parse(const std::string& text) const {
        return nf(Polynomial::parse(base_, text));
    }

private:
    PolyRingPtr base_;
    GroebnerBasis defining_;
    bool graded_ = false;
};

bool same_qring(const QRingPtr& a, const QRingPtr& b);

// Exact zero-divisor test via the ideal quotient (J : a) computed by an
// elimination Groebner basis, never by degree search. degree_cap bounds the
// internal basis computation (CapError on overflow).
bool is_zerodivisor(const Polynomial& a, const QRingPtr& ring, uint32_t degree_cap = 0);

// Generators of the annihilator (0 :_R a) as normal forms.
std::vector<Polynomial> element_annihilator(const Polynomial& a, const QRingPtr& ring,
                                            uint32_t degree_cap = 0);

}  // namespace tracealg
