#include "tracealg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "tracealg/errors.hpp"

namespace tracealg {

Polynomial Polynomial::constant(PolyRingPtr ring, Scalar c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::one(PolyRingPtr ring) {
    auto f = ring->field;
    return constant(std::move(ring), Scalar::one(f));
}

Polynomial Polynomial::variable(PolyRingPtr ring, size_t var) {
    Monomial m(ring->nvars());
    m.e.at(var) = 1;
    m.deg = 1;
    Scalar c = Scalar::one(ring->field);
    return term(std::move(ring), std::move(m), std::move(c));
}

Polynomial Polynomial::term(PolyRingPtr ring, Monomial m, Scalar c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ring_->order.compare(a.m, b.m) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c += t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

Scalar Polynomial::constant_coefficient() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return Scalar::zero(ring_->field);
}

std::optional<int64_t> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int64_t d = ring_->weighted_degree(terms_[0].m);
    for (const auto& t : terms_)
        if (ring_->weighted_degree(t.m) != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->order.compare(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) out.terms_.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& t : out.terms_) t.c = -t.c;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar s = t.c * c;
        if (!s.is_zero()) out.terms_.push_back({t.m * m, std::move(s)});
    }
    return out;  // multiplicative order: term order is preserved
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    Polynomial out(ring_);
    for (const auto& t : o.terms_) out += times_term(t.m, t.c);
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.m, t.c * c});
    return out;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty() || terms_[0].c.is_one()) return *this;
    return scaled(terms_[0].c.inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

// ---------------------------------------------------------------------------
// text I/O

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a number at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                ++pos;
        }
        if (start == pos)
            throw ParseError("expected an identifier at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
};

class PolyParser {
public:
    PolyParser(PolyRingPtr ring, const std::string& text) : ring_(std::move(ring)), lx_{text} {}

    Polynomial run() {
        Polynomial p = expr();
        if (lx_.peek() != '\0')
            throw ParseError("unexpected character '" + std::string(1, lx_.peek()) +
                             "' in polynomial");
        return p;
    }

private:
    Polynomial expr() {
        Polynomial acc = lx_.eat('-') ? -product() : product();
        for (;;) {
            if (lx_.eat('+'))
                acc += product();
            else if (lx_.eat('-'))
                acc -= product();
            else
                return acc;
        }
    }

    Polynomial product() {
        Polynomial acc = factor();
        for (;;) {
            char c = lx_.peek();
            if (c == '*') {
                lx_.eat('*');
                acc = acc * factor();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        char c = lx_.peek();
        Polynomial base(ring_);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lx_.number();
            if (lx_.peek() == '/') {
                lx_.eat('/');
                std::string den = lx_.number();
                base = Polynomial::constant(ring_, Scalar::parse(ring_->field, num + "/" + den));
            } else {
                base = Polynomial::constant(ring_, Scalar::parse(ring_->field, num));
            }
        } else if (c == '(') {
            lx_.eat('(');
            base = expr();
            if (!lx_.eat(')')) throw ParseError("missing ')'");
        } else {
            std::string name = lx_.ident();
            int v = ring_->var_index(name);
            if (v < 0) throw ParseError("unknown variable '" + name + "'");
            base = Polynomial::variable(ring_, static_cast<size_t>(v));
        }
        if (lx_.eat('^')) {
            unsigned long exp = std::stoul(lx_.number());
            Polynomial acc = Polynomial::one(ring_);
            for (unsigned long i = 0; i < exp; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    PolyRingPtr ring_;
    Lexer lx_;
};

}  // namespace

Polynomial Polynomial::parse(PolyRingPtr ring, const std::string& text) {
    return PolyParser(std::move(ring), text).run();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        std::string coef = t.c.to_string();
        bool neg = coef.size() > 0 && coef[0] == '-';
        if (i == 0) {
            if (neg) {
                out += "-";
                coef = coef.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) coef = coef.substr(1);
        }
        std::string mono;
        for (size_t v = 0; v < t.m.e.size(); ++v) {
            if (t.m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[v];
            if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
        }
        if (mono.empty()) {
            out += coef;
        } else if (coef == "1") {
            out += mono;
        } else {
            out += coef + "*" + mono;
        }
    }
    return out;
}

}  // namespace tracealg
