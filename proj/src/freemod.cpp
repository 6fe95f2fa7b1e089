#include "tracealg/freemod.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tracealg/errors.hpp"

namespace tracealg {

VecPoly make_sorted(PolyRingPtr ring, uint32_t rank, std::vector<ModTerm> terms,
                    const ModuleOrder& mo) {
    VecPoly v(std::move(ring), rank);
    std::sort(terms.begin(), terms.end(),
              [&](const ModTerm& a, const ModTerm& b) { return mo.compare(a.mm, b.mm) > 0; });
    std::vector<ModTerm> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mm == t.mm) {
            out.back().c += t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    v.terms_ = std::move(out);
    return v;
}

VecPoly VecPoly::from_components(PolyRingPtr ring, const std::vector<Polynomial>& comps,
                                 const ModuleOrder& mo) {
    std::vector<ModTerm> terms;
    for (uint32_t c = 0; c < comps.size(); ++c)
        for (const auto& t : comps[c].terms()) terms.push_back({{t.m, c}, t.c});
    return make_sorted(std::move(ring), static_cast<uint32_t>(comps.size()), std::move(terms), mo);
}

std::vector<Polynomial> VecPoly::to_components() const {
    std::vector<std::vector<Term>> buckets(rank_);
    for (const auto& t : terms_) buckets[t.mm.comp].push_back({t.mm.m, t.c});
    std::vector<Polynomial> out;
    out.reserve(rank_);
    for (auto& b : buckets) out.push_back(Polynomial::from_terms(ring_, std::move(b)));
    return out;
}

Polynomial VecPoly::component(uint32_t c) const {
    std::vector<Term> ts;
    for (const auto& t : terms_)
        if (t.mm.comp == c) ts.push_back({t.mm.m, t.c});
    return Polynomial::from_terms(ring_, std::move(ts));
}

uint32_t VecPoly::max_degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mm.m.deg);
    return d;
}

bool VecPoly::supported_below(uint32_t split) const {
    for (const auto& t : terms_)
        if (t.mm.comp < split) return false;
    return true;
}

VecPoly VecPoly::plus(const VecPoly& o, const ModuleOrder& mo) const {
    VecPoly out(ring_, rank_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mo.compare(terms_[i].mm, o.terms_[j].mm);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) out.terms_.push_back({terms_[i].mm, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

VecPoly VecPoly::minus(const VecPoly& o, const ModuleOrder& mo) const {
    return plus(o.scaled(-Scalar::one(ring_->field)), mo);
}

VecPoly VecPoly::times_term(const Monomial& m, const Scalar& c) const {
    VecPoly out(ring_, rank_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar s = t.c * c;
        if (!s.is_zero()) out.terms_.push_back({{t.mm.m * m, t.mm.comp}, std::move(s)});
    }
    return out;  // multiplicative orders preserve sortedness
}

VecPoly VecPoly::scaled(const Scalar& c) const {
    VecPoly out(ring_, rank_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mm, t.c * c});
    return out;
}

VecPoly VecPoly::monic() const {
    if (terms_.empty() || terms_[0].c.is_one()) return *this;
    return scaled(terms_[0].c.inverse());
}

bool VecPoly::equals(const VecPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mm == o.terms_[i].mm) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

// ---------------------------------------------------------------------------
// division

ModDivision module_divide(VecPoly v, const std::vector<VecPoly>& basis, const ModuleOrder& mo) {
    ModDivision out;
    out.quotients.assign(basis.size(), Polynomial::zero(v.ring()));
    std::vector<ModTerm> done;
    while (!v.is_zero()) {
        const ModMono& lead = v.leading();
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            const ModMono& blt = basis[i].leading();
            if (blt.comp == lead.comp && blt.m.divides(lead.m)) {
                Monomial q = lead.m / blt.m;
                Scalar c = v.leading_coefficient() / basis[i].leading_coefficient();
                out.quotients[i] += Polynomial::term(v.ring(), q, c);
                v = v.minus(basis[i].times_term(q, c), mo);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            done.push_back(v.terms().front());
            // move the irreducible leading term out of the working vector
            VecPoly lt = make_sorted(v.ring(), v.rank(), {v.terms().front()}, mo);
            v = v.minus(lt, mo);
        }
    }
    out.remainder = make_sorted(v.ring(), v.rank(), std::move(done), mo);
    return out;
}

VecPoly module_normal_form(VecPoly v, const std::vector<VecPoly>& basis, const ModuleOrder& mo) {
    // same loop as module_divide without bookkeeping
    std::vector<ModTerm> done;
    while (!v.is_zero()) {
        const ModMono& lead = v.leading();
        bool reduced = false;
        for (const auto& b : basis) {
            const ModMono& blt = b.leading();
            if (blt.comp == lead.comp && blt.m.divides(lead.m)) {
                Monomial q = lead.m / blt.m;
                Scalar c = v.leading_coefficient() / b.leading_coefficient();
                v = v.minus(b.times_term(q, c), mo);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            done.push_back(v.terms().front());
            VecPoly lt = make_sorted(v.ring(), v.rank(), {v.terms().front()}, mo);
            v = v.minus(lt, mo);
        }
    }
    return make_sorted(v.ring(), v.rank(), std::move(done), mo);
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Pair {
    uint32_t i, j;       // i < j
    ModMono lcm_mm;
    uint32_t sugar;
};

struct PairKey {
    uint32_t sugar;
    ModMono lcm_mm;
    uint32_t i, j;
};

}  // namespace

std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const ModuleOrder& mo,
                                     uint32_t degree_cap) {
    const PolyRingPtr ring = [&]() -> PolyRingPtr {
        for (const auto& g : gens)
            if (g.ring()) return g.ring();
        return nullptr;
    }();

    std::vector<VecPoly> basis;
    std::vector<uint32_t> sugar;
    for (auto& g : gens) {
        if (!g.is_zero()) {
            sugar.push_back(g.max_degree());
            basis.push_back(std::move(g));
        }
    }
    if (basis.empty()) return {};

    // deterministic starting order: descending leading terms, ties by size
    {
        std::vector<size_t> idx(basis.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            int c = mo.compare(basis[a].leading(), basis[b].leading());
            if (c != 0) return c > 0;
            return basis[a].terms().size() < basis[b].terms().size();
        });
        std::vector<VecPoly> nb;
        std::vector<uint32_t> ns;
        for (size_t k : idx) {
            nb.push_back(std::move(basis[k]));
            ns.push_back(sugar[k]);
        }
        basis = std::move(nb);
        sugar = std::move(ns);
    }

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (int c = mo.compare(a.lcm_mm, b.lcm_mm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    std::set<std::pair<uint32_t, uint32_t>> handled;

    auto push_pair = [&](uint32_t i, uint32_t j) {
        const ModMono& a = basis[i].leading();
        const ModMono& b = basis[j].leading();
        if (a.comp != b.comp) return;
        // product criterion, valid for ideals (rank-1 modules)
        if (basis[i].rank() == 1 && a.m.coprime(b.m)) {
            handled.insert({i, j});
            return;
        }
        Monomial l = lcm(a.m, b.m);
        uint32_t sg = std::max(sugar[i] + (l.deg - a.m.deg), sugar[j] + (l.deg - b.m.deg));
        queue.push_back({i, j, {l, a.comp}, sg});
    };

    for (uint32_t i = 0; i < basis.size(); ++i)
        for (uint32_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        handled.insert({p.i, p.j});

        if (degree_cap && p.lcm_mm.m.deg > degree_cap)
            throw CapError("Groebner degree cap exceeded (" + std::to_string(p.lcm_mm.m.deg) +
                           " > " + std::to_string(degree_cap) + ")");

        // chain criterion
        {
            bool skip = false;
            for (uint32_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == p.i || k == p.j) continue;
                const ModMono& klt = basis[k].leading();
                if (klt.comp != p.lcm_mm.comp || !klt.m.divides(p.lcm_mm.m)) continue;
                auto ik = std::minmax(p.i, k), jk = std::minmax(p.j, k);
                if (handled.count({ik.first, ik.second}) && handled.count({jk.first, jk.second}))
                    skip = true;
            }
            if (skip) continue;
        }

        const VecPoly& f = basis[p.i];
        const VecPoly& g = basis[p.j];
        Monomial mf = p.lcm_mm.m / f.leading().m;
        Monomial mg = p.lcm_mm.m / g.leading().m;
        VecPoly s = f.times_term(mf, f.leading_coefficient().inverse())
                        .minus(g.times_term(mg, g.leading_coefficient().inverse()), mo);
        VecPoly r = module_normal_form(std::move(s), basis, mo);
        if (r.is_zero()) continue;

        uint32_t nid = static_cast<uint32_t>(basis.size());
        basis.push_back(r.monic());
        sugar.push_back(std::max(p.sugar, r.max_degree()));
        for (uint32_t i = 0; i < nid; ++i) push_pair(i, nid);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<VecPoly> kept;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const ModMono& a = basis[j].leading();
            const ModMono& b = basis[i].leading();
            if (a.comp == b.comp && a.m.divides(b.m)) {
                // on equal leading terms keep the earlier element
                redundant = !(a.m == b.m) || j < i;
            }
        }
        if (!redundant) kept.push_back(basis[i]);
    }

    // reduce tails: each element fully reduced against the others
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<VecPoly> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = module_normal_form(kept[i], others, mo).monic();
    }

    std::sort(kept.begin(), kept.end(), [&](const VecPoly& a, const VecPoly& b) {
        return mo.compare(a.leading(), b.leading()) > 0;
    });
    return kept;
}

}  // namespace tracealg
