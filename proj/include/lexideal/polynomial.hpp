#ifndef LEXIDEAL_POLYNOMIAL_HPP
#define LEXIDEAL_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "term.hpp"

namespace lexideal {

// Evaluate a term at a point (coordinate vector) by repeated squaring per
// variable; exponents at this scale are tiny, so a simple loop suffices.
template <class K>
K eval_term(const Term& t, const std::vector<K>& point) {
    if (point.empty())
        throw ValidationError("evaluation point has no coordinates");
    K acc = point[0].one();
    for (std::size_t i = 0; i < t.nvars(); ++i)
        for (unsigned e = 0; e < t.exp(i); ++e)
            acc *= point[i];
    return acc;
}

// Sparse polynomial over an exact scalar type K, stored as a lex-ascending
// map from terms to nonzero coefficients. The zero polynomial has no terms.
template <class K>
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial monomial(const Term& t, const K& c) {
        Polynomial p;
        if (!c.is_zero())
            p.terms_.emplace(t, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Term, K>& terms() const { return terms_; }

    std::size_t nvars() const {
        if (terms_.empty())
            throw ValidationError("zero polynomial has no ambient dimension");
        return terms_.begin()->first.nvars();
    }

    const Term& leading_term() const {
        if (terms_.empty())
            throw ValidationError("leading term of the zero polynomial");
        return terms_.rbegin()->first;
    }
    const K& leading_coeff() const {
        if (terms_.empty())
            throw ValidationError("leading coefficient of the zero polynomial");
        return terms_.rbegin()->second;
    }

    K coeff(const Term& t) const {
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            if (terms_.empty())
                throw ValidationError("coefficient lookup on the zero polynomial");
            return terms_.begin()->second.zero();
        }
        return it->second;
    }

    void add_term(const Term& t, const K& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [t, c] : o.terms_)
            add_term(t, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [t, c] : o.terms_)
            add_term(t, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial p;
        for (const auto& [t, c] : terms_)
            p.terms_.emplace(t, -c);
        return p;
    }

    // *this scaled by c * t.
    Polynomial times_monomial(const Term& t, const K& c) const {
        Polynomial p;
        if (c.is_zero())
            return p;
        for (const auto& [u, k] : terms_)
            p.terms_.emplace(u * t, k * c);
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p;
        for (const auto& [t, c] : a.terms_)
            p += b.times_monomial(t, c);
        return p;
    }

    Polynomial& scale(const K& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [t, k] : terms_)
            k *= c;
        return *this;
    }

    Polynomial monic() const {
        if (terms_.empty())
            throw ValidationError("cannot normalize the zero polynomial");
        Polynomial p(*this);
        const K lc = p.leading_coeff();
        for (auto& [t, k] : p.terms_)
            k /= lc;
        return p;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.empty())
            throw ValidationError("evaluation point has no coordinates");
        K acc = point[0].zero();
        for (const auto& [t, c] : terms_)
            acc += c * eval_term(t, point);
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Term, K> terms_;
};

// S-polynomial: cancel the leading terms of f and g against their lcm.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    const Term& tf = f.leading_term();
    const Term& tg = g.leading_term();
    std::vector<unsigned> l(tf.nvars());
    for (std::size_t i = 0; i < l.size(); ++i)
        l[i] = std::max(tf.exp(i), tg.exp(i));
    Term lcm{l};
    Polynomial<K> a = f.times_monomial(lcm.div(tf), f.leading_coeff().one() / f.leading_coeff());
    Polynomial<K> b = g.times_monomial(lcm.div(tg), g.leading_coeff().one() / g.leading_coeff());
    return a - b;
}

// Remainder of f under multivariate division by `basis`. Reduction strategy
// (fixed so results are reproducible bit for bit): repeatedly take the
// lex-largest still-reducible term of the work polynomial, and among the
// basis elements whose leading term divides it choose the one with the
// lex-smallest leading term. The result has no term divisible by any basis
// leading term; entries equal to `skip` positions are ignored (used for
// reducing a basis element against the others).
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f,
                          const std::vector<Polynomial<K>>& basis,
                          std::size_t skip = static_cast<std::size_t>(-1)) {
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != skip && basis[j].is_zero())
            throw ValidationError("cannot reduce by the zero polynomial");
    Polynomial<K> r = f;
    bool changed = true;
    while (changed && !r.is_zero()) {
        changed = false;
        // walk terms from the lex-largest down
        const auto& terms = r.terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const Term& t = it->first;
            std::size_t best = basis.size();
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (j == skip)
                    continue;
                if (!basis[j].leading_term().divides(t))
                    continue;
                if (best == basis.size() ||
                    basis[j].leading_term() < basis[best].leading_term())
                    best = j;
            }
            if (best == basis.size())
                continue;
            const K factor = it->second / basis[best].leading_coeff();
            r -= basis[best].times_monomial(t.div(basis[best].leading_term()), factor);
            changed = true;
            break;
        }
    }
    return r;
}

// Lex-descending textual form, e.g. "x2^2 - 2*x1*x2 + 1/2*x1 - 24".
template <class K>
std::string render_poly(const Polynomial<K>& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        K c = it->second;
        const bool neg = c.negative();
        if (out.empty()) {
            if (neg)
                out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg)
            c = -c;
        const std::string ts = render_term(it->first);
        const std::string cs = c.str();
        if (ts == "1")
            out += cs;
        else if (cs == "1")
            out += ts;
        else
            out += cs + "*" + ts;
    }
    return out;
}

} // namespace lexideal

#endif // LEXIDEAL_POLYNOMIAL_HPP
