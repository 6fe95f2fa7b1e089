#pragma once

// Shared test rings and small helpers.

#include <initializer_list>

#include "tracealg/homological.hpp"

namespace tracealg::testing {

inline QRingPtr ring_of(FieldSpec f, std::vector<std::string> vars,
                        std::initializer_list<const char*> defining,
                        std::vector<uint32_t> weights = {}) {
    auto P = PolyRing::make(f, std::move(vars), OrderKind::grevlex, std::move(weights));
    std::vector<Polynomial> gens;
    for (const char* s : defining) gens.push_back(Polynomial::parse(P, s));
    return QuotientRing::make(P, gens);
}

// k[x,y]/(xy) over F5: the graded avatar of k[[x,y]]/(xy)
inline QRingPtr nodal() { return ring_of(FieldSpec::prime(5), {"x", "y"}, {"x*y"}); }

// Q[x,y]/(x^2 y^2)
inline QRingPtr hypersurface() {
    return ring_of(FieldSpec::rationals(), {"x", "y"}, {"x^2*y^2"});
}

// F2[x,y]/(x^2, y^2): Artinian Gorenstein, dim 4
inline QRingPtr quadric() { return ring_of(FieldSpec::prime(2), {"x", "y"}, {"x^2", "y^2"}); }

// F3[x]/(x^4): Artinian Gorenstein chain ring
inline QRingPtr chain4() { return ring_of(FieldSpec::prime(3), {"x"}, {"x^4"}); }

// F2[x,y]/(x^2, xy, y^2): Artinian, not Gorenstein (socle has dimension 2)
inline QRingPtr fat_point() {
    return ring_of(FieldSpec::prime(2), {"x", "y"}, {"x^2", "x*y", "y^2"});
}

// weighted avatar of the semigroup ring k[[t^3, t^4, t^5]]
inline QRingPtr semigroup345(FieldSpec f = FieldSpec::prime(7)) {
    return ring_of(f, {"a", "b", "c"}, {"b^2 - a*c", "c^2 - a^2*b", "b*c - a^3"}, {3, 4, 5});
}

inline ModulePtr ideal_in(const QRingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> ps;
    for (const char* s : gens) ps.push_back(R->parse(s));
    return present_ideal(ps, R);
}

inline GroebnerBasis ideal_basis(const QRingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> ps;
    for (const char* s : gens) ps.push_back(R->parse(s));
    return ideal_basis_in_ring(R, ps);
}

}  // namespace tracealg::testing
