#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "tracealg/scalar.hpp"

namespace tracealg {

// Exponent vector with cached total degree. Length always equals the
// ambient ring's variable count.
struct Monomial {
    std::vector<uint32_t> e;
    uint32_t deg = 0;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<uint32_t> exps)
        : e(std::move(exps)), deg(std::accumulate(e.begin(), e.end(), 0u)) {}

    bool is_one() const { return deg == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        r.deg = deg + o.deg;
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // this / o; caller guarantees divisibility
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        r.deg = deg - o.deg;
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

Monomial lcm(const Monomial& a, const Monomial& b);

enum class OrderKind : uint8_t { grevlex, lex, grlex };

// Global monomial order: grevlex / lex / grlex with a variable precedence
// permutation (precedence[0] is the biggest variable).
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<uint32_t> precedence;

    static MonomialOrder make(OrderKind k, size_t nvars);

    // >0 if a > b, 0 if equal, <0 if a < b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder&) const = default;
};

// Ambient polynomial ring k[x_1..x_n] with a fixed global order and
// positive variable weights (all 1 unless a weighted grading is declared).
struct PolyRing {
    FieldSpec field;
    std::vector<std::string> vars;
    MonomialOrder order;
    std::vector<uint32_t> weights;

    size_t nvars() const { return vars.size(); }
    int64_t weighted_degree(const Monomial& m) const;
    int var_index(const std::string& name) const;  // -1 if absent

    static std::shared_ptr<const PolyRing> make(FieldSpec field,
                                                std::vector<std::string> vars,
                                                OrderKind kind = OrderKind::grevlex,
                                                std::vector<uint32_t> weights = {});
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

}  // namespace tracealg
