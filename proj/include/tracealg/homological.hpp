#pragma once

#include "tracealg/resolution.hpp"

namespace tracealg {

// Hom_R(M, N) presented abstractly, with one explicit lift per generator:
// lift L is the t x s matrix sending M's generator i to the element with
// coordinates L(.,i) in N's generators.
struct HomModule {
    ModulePtr carrier;
    std::vector<RingMatrix> lifts;
};

HomModule hom_module(const ModulePtr& m, const ModulePtr& n, uint32_t degree_cap = 0);

// Ext^i_R(M, N) from a minimal free resolution of M; Ext^0 = Hom.
ModulePtr ext_module(size_t i, const ModulePtr& m, const ModulePtr& n, uint32_t degree_cap = 0);

// M* = Hom_R(M, R)
HomModule dual_module(const ModulePtr& m, uint32_t degree_cap = 0);

struct TraceResult {
    ModulePtr trace;                                 // submodule of X, embedding kept
    std::optional<GroebnerBasis> ideal_basis;        // reduced basis when X = R
    std::vector<RingMatrix> certifying_maps;
    bool proper = false;
};

// T_X(M): submodule of X generated by the images of all homomorphisms M -> X.
TraceResult trace_in(const ModulePtr& m, const ModulePtr& x, uint32_t degree_cap = 0);

enum class TraceMethod { hom_images, left_kernel };

// Trace ideal of an embedded ideal by one method, or by both with a
// cross-check (EngineError on disagreement).
TraceResult trace_ideal(const ModulePtr& ideal, TraceMethod method, uint32_t degree_cap = 0);
TraceResult trace_ideal_checked(const ModulePtr& ideal, uint32_t degree_cap = 0);

// The two equivalent trace-module criteria, separately and combined
// (combined raises EngineError if they ever disagree).
bool is_trace_module_via_trace(const ModulePtr& m, const ModulePtr& x, uint32_t degree_cap = 0);
bool is_trace_module_via_homs(const ModulePtr& m, const ModulePtr& x, uint32_t degree_cap = 0);
bool is_trace_module(const ModulePtr& m, const ModulePtr& x, uint32_t degree_cap = 0);

// (0 :_R M) as an embedded ideal
ModulePtr annihilator(const ModulePtr& m, uint32_t degree_cap = 0);

// (0 :_M m) as a submodule of M; requires the variables to generate a
// (graded-)local maximal ideal
ModulePtr socle(const ModulePtr& m, uint32_t degree_cap = 0);

// least i with Ext^i(R/I, R) != 0, searched up to nvars + 1
size_t grade(const ModulePtr& ideal, uint32_t degree_cap = 0);

// Hom_{R/I}(I/I^2, R/I), plus the vanishing verdict cross-checked against
// Hom_R(I, R/I) via adjunction.
struct ConormalDual {
    ModulePtr carrier;  // module over R/I
    bool vanishes = false;
};
ConormalDual conormal_dual(const ModulePtr& ideal, uint32_t degree_cap = 0);

// Omega^{-n} M := (Omega^n (M*))* over an Artinian Gorenstein ring.
ModulePtr cosyzygy_module(const ModulePtr& m, size_t n, uint32_t degree_cap = 0);

// finite k-dimension and one-dimensional socle
bool is_artinian_gorenstein(const QRingPtr& ring, uint32_t degree_cap = 0);

struct RigidityVerdict {
    std::optional<size_t> ext1_dimension;  // nullopt when infinite
    bool rigid = false;
    bool free = false;
};
RigidityVerdict rigidity(const ModulePtr& m, uint32_t degree_cap = 0);

// X/M for M presented inside X (or R/I for an embedded ideal)
ModulePtr quotient_by_submodule(const ModulePtr& x, const ModulePtr& m);

// Reduced basis of the ideal generated by gens inside R (preimage in the
// base polynomial ring, defining ideal included) — the canonical form all
// ideal comparisons use.
GroebnerBasis ideal_basis_in_ring(const QRingPtr& ring, const std::vector<Polynomial>& gens,
                                  uint32_t degree_cap = 0);

}  // namespace tracealg
