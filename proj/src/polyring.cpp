#include "tracealg/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracealg {

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    uint32_t d = 0;
    for (size_t i = 0; i < a.e.size(); ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

MonomialOrder MonomialOrder::make(OrderKind k, size_t nvars) {
    MonomialOrder o;
    o.kind = k;
    o.precedence.resize(nvars);
    for (size_t i = 0; i < nvars; ++i) o.precedence[i] = static_cast<uint32_t>(i);
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case OrderKind::lex:
            for (uint32_t v : precedence) {
                if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
            }
            return 0;
        case OrderKind::grlex:
            if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
            for (uint32_t v : precedence) {
                if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
            }
            return 0;
        case OrderKind::grevlex:
        default:
            if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
            // smaller exponent on the least variable wins
            for (size_t i = precedence.size(); i-- > 0;) {
                uint32_t v = precedence[i];
                if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
            }
            return 0;
    }
}

int64_t PolyRing::weighted_degree(const Monomial& m) const {
    int64_t d = 0;
    for (size_t i = 0; i < weights.size(); ++i) d += int64_t(weights[i]) * m.e[i];
    return d;
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

PolyRingPtr PolyRing::make(FieldSpec field, std::vector<std::string> vars, OrderKind kind,
                           std::vector<uint32_t> weights) {
    auto r = std::make_shared<PolyRing>();
    for (const auto& v : vars) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (std::count(vars.begin(), vars.end(), v) != 1)
            throw std::invalid_argument("duplicate variable name: " + v);
    }
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size()) throw std::invalid_argument("weight count mismatch");
    for (uint32_t w : weights)
        if (w == 0) throw std::invalid_argument("variable weights must be positive");
    r->field = field;
    r->vars = std::move(vars);
    r->order = MonomialOrder::make(kind, r->vars.size());
    r->weights = std::move(weights);
    return r;
}

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field == b->field && a->vars == b->vars && a->order == b->order &&
           a->weights == b->weights;
}

}  // namespace tracealg
