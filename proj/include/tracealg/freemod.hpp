#pragma once

#include <cstdint>
#include <vector>

#include "tracealg/polynomial.hpp"

namespace tracealg {

// Term position inside a free module P^rank: a monomial in a component.
struct ModMono {
    Monomial m;
    uint32_t comp = 0;
    bool operator==(const ModMono&) const = default;
};

struct ModTerm {
    ModMono mm;
    Scalar c;
};

// Order on free-module monomials. Plain form is TOP (ring order first,
// lower component wins ties). With elim_split = s, every term in components
// [0, s) dominates every term in components [s, rank) — the elimination
// order used to read syzygies off a Gröbner basis.
struct ModuleOrder {
    MonomialOrder ord;
    uint32_t elim_split = 0;

    int compare(const ModMono& a, const ModMono& b) const {
        if (elim_split) {
            bool ta = a.comp < elim_split, tb = b.comp < elim_split;
            if (ta != tb) return ta ? 1 : -1;
        }
        if (int c = ord.compare(a.m, b.m)) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }
};

// Element of a free module P^rank over the ambient polynomial ring,
// kept as a term list sorted strictly descending under a ModuleOrder.
class VecPoly {
public:
    VecPoly() = default;
    VecPoly(PolyRingPtr ring, uint32_t rank) : ring_(std::move(ring)), rank_(rank) {}

    static VecPoly from_components(PolyRingPtr ring, const std::vector<Polynomial>& comps,
                                   const ModuleOrder& mo);
    std::vector<Polynomial> to_components() const;
    Polynomial component(uint32_t c) const;

    const PolyRingPtr& ring() const { return ring_; }
    uint32_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<ModTerm>& terms() const { return terms_; }
    const ModMono& leading() const { return terms_.front().mm; }
    const Scalar& leading_coefficient() const { return terms_.front().c; }
    // max total degree over all terms (sugar seed); 0 for zero
    uint32_t max_degree() const;
    // true if every term lies in components >= split
    bool supported_below(uint32_t split) const;

    VecPoly plus(const VecPoly& o, const ModuleOrder& mo) const;
    VecPoly minus(const VecPoly& o, const ModuleOrder& mo) const;
    VecPoly times_term(const Monomial& m, const Scalar& c) const;
    VecPoly scaled(const Scalar& c) const;
    VecPoly monic() const;
    bool equals(const VecPoly& o) const;

private:
    friend VecPoly make_sorted(PolyRingPtr, uint32_t, std::vector<ModTerm>, const ModuleOrder&);
    PolyRingPtr ring_;
    uint32_t rank_ = 0;
    std::vector<ModTerm> terms_;
};

VecPoly make_sorted(PolyRingPtr ring, uint32_t rank, std::vector<ModTerm> terms,
                    const ModuleOrder& mo);

// Full normal form of v modulo basis; basis elements must be nonzero.
VecPoly module_normal_form(VecPoly v, const std::vector<VecPoly>& basis, const ModuleOrder& mo);

// Normal form with division certificate: v = sum_i q_i * basis_i + remainder.
struct ModDivision {
    std::vector<Polynomial> quotients;
    VecPoly remainder;
};
ModDivision module_divide(VecPoly v, const std::vector<VecPoly>& basis, const ModuleOrder& mo);

// Reduced Groebner basis of the submodule of P^rank generated by gens.
// Deterministic for fixed input. degree_cap > 0 aborts with CapError once an
// S-pair lcm exceeds the cap.
std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const ModuleOrder& mo,
                                     uint32_t degree_cap = 0);

}  // namespace tracealg
