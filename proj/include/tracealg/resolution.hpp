#pragma once

#include "tracealg/module.hpp"

namespace tracealg {

// Minimal free resolution F_len -> ... -> F_1 -> F_0 (-> M -> 0), graded
// when M is graded. Differentials stop early if a kernel vanishes; every
// later syzygy is then zero.
struct FreeResolution {
    QRingPtr ring;
    bool minimal = true;
    bool graded = false;
    std::vector<size_t> ranks;                      // rank of F_0, F_1, ...
    std::vector<std::vector<int64_t>> degrees;      // component degrees per F_i (graded)
    std::vector<RingMatrix> differentials;          // d_1, d_2, ...; d_i : F_i -> F_{i-1}
    bool complete = false;                          // true when the last kernel was zero

    size_t rank(size_t i) const { return i < ranks.size() ? ranks[i] : 0; }
    const RingMatrix* differential(size_t i) const {
        return (i >= 1 && i <= differentials.size()) ? &differentials[i - 1] : nullptr;
    }
};

// Minimal resolution to homological degree `length`. Requires a graded module
// over a graded quotient, or any module over an Artinian quotient.
FreeResolution resolve(const PresentedModule& m, size_t length, uint32_t degree_cap = 0);

// n-th syzygy: image of d_n presented by d_{n+1}; syzygy 0 is M itself.
ModulePtr syzygy_module(const ModulePtr& m, size_t n, uint32_t degree_cap = 0);

}  // namespace tracealg
