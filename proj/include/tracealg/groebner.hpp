#pragma once

#include <vector>

#include "tracealg/freemod.hpp"
#include "tracealg/polynomial.hpp"

namespace tracealg {

// Reduced Groebner basis: monic generators, fully inter-reduced, sorted by
// descending leading term. The unique canonical generating set of its ideal
// for the ring's order.
struct GroebnerBasis {
    PolyRingPtr ring;
    std::vector<Polynomial> gens;
    bool reduced = true;

    bool contains_one() const {
        return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
    }
    bool is_zero_ideal() const { return gens.empty(); }
};

GroebnerBasis groebner_basis(PolyRingPtr ring, const std::vector<Polynomial>& gens,
                             uint32_t degree_cap = 0);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Division certificate: f = sum_i quotients[i] * basis[i] + remainder, with no
// remainder term divisible by any basis leading term.
struct Division {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};
Division divide(const Polynomial& f, const std::vector<Polynomial>& basis);

// Reduced bases are canonical, so ideal equality is term-by-term equality.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace tracealg
