#include "tracealg/groebner.hpp"

#include <stdexcept>

namespace tracealg {

namespace {

ModuleOrder ring_order(const PolyRingPtr& ring) { return ModuleOrder{ring->order, 0}; }

VecPoly wrap(const Polynomial& p, const ModuleOrder& mo) {
    return VecPoly::from_components(p.ring(), {p}, mo);
}

}  // namespace

GroebnerBasis groebner_basis(PolyRingPtr ring, const std::vector<Polynomial>& gens,
                             uint32_t degree_cap) {
    ModuleOrder mo = ring_order(ring);
    std::vector<VecPoly> in;
    in.reserve(gens.size());
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generator ring mismatch");
        if (!g.is_zero()) in.push_back(wrap(g, mo));
    }
    auto gb = module_groebner(std::move(in), mo, degree_cap);
    GroebnerBasis out;
    out.ring = std::move(ring);
    out.gens.reserve(gb.size());
    for (const auto& v : gb) out.gens.push_back(v.component(0));
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!same_ring(f.ring(), gb.ring)) throw std::invalid_argument("ring mismatch");
    if (gb.gens.empty() || f.is_zero()) return f;
    ModuleOrder mo = ring_order(gb.ring);
    std::vector<VecPoly> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens) basis.push_back(wrap(g, mo));
    return module_normal_form(wrap(f, mo), basis, mo).component(0);
}

Division divide(const Polynomial& f, const std::vector<Polynomial>& basis) {
    ModuleOrder mo = ring_order(f.ring());
    std::vector<VecPoly> b;
    b.reserve(basis.size());
    for (const auto& g : basis) b.push_back(wrap(g, mo));
    ModDivision d = module_divide(wrap(f, mo), b, mo);
    return {std::move(d.quotients), d.remainder.component(0)};
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (!same_ring(a.ring, b.ring)) throw std::invalid_argument("order/ring mismatch");
    if (a.gens.size() != b.gens.size()) return false;
    for (size_t i = 0; i < a.gens.size(); ++i)
        if (a.gens[i] != b.gens[i]) return false;
    return true;
}

}  // namespace tracealg
