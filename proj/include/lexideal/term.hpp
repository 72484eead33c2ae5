#ifndef LEXIDEAL_TERM_HPP
#define LEXIDEAL_TERM_HPP

#include <cassert>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace lexideal {

// A monomial x1^e1 * ... * xn^en as a dense exponent vector. The comparison
// operators implement the lexicographic order induced by x1 < x2 < ... < xn:
// exponents are compared from the highest variable downwards, so e.g.
// x1^3 < x2 and x2^2 < x1*x3.
class Term {
public:
    Term() = default;
    explicit Term(std::size_t nvars) : e_(nvars, 0) {}
    Term(std::initializer_list<unsigned> e) : e_(e) {}
    explicit Term(std::vector<unsigned> e) : e_(std::move(e)) {}

    std::size_t nvars() const { return e_.size(); }
    unsigned exp(std::size_t i) const { return e_[i]; } // 0-based variable index
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), 0u);
    }
    bool is_constant() const { return total_degree() == 0; }

    // 1-based index of the highest variable actually present; 0 for constants.
    std::size_t max_var() const {
        for (std::size_t i = e_.size(); i > 0; --i)
            if (e_[i - 1] > 0)
                return i;
        return 0;
    }

    Term times_var(std::size_t i) const {
        Term t(*this);
        ++t.e_[i];
        return t;
    }
    Term divided_by_var(std::size_t i) const {
        assert(e_[i] > 0);
        Term t(*this);
        --t.e_[i];
        return t;
    }

    Term operator*(const Term& o) const {
        assert(nvars() == o.nvars());
        Term t(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            t.e_[i] += o.e_[i];
        return t;
    }

    bool divides(const Term& o) const {
        assert(nvars() == o.nvars());
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i])
                return false;
        return true;
    }

    // Exact quotient; requires o.divides(*this).
    Term div(const Term& o) const {
        assert(o.divides(*this));
        Term t(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            t.e_[i] -= o.e_[i];
        return t;
    }

    // Zero out every variable above the m-th (keeps the ambient dimension).
    Term projected(std::size_t m) const {
        Term t(*this);
        for (std::size_t i = m; i < t.e_.size(); ++i)
            t.e_[i] = 0;
        return t;
    }

    // Keep only variables above the m-th (zero the lower ones).
    Term upper_part(std::size_t m) const {
        Term t(*this);
        for (std::size_t i = 0; i < m && i < t.e_.size(); ++i)
            t.e_[i] = 0;
        return t;
    }

    // Pad with zero exponents up to `nvars` variables.
    Term embedded(std::size_t nvars) const {
        assert(nvars >= e_.size());
        Term t(*this);
        t.e_.resize(nvars, 0);
        return t;
    }

    // Drop variables above the m-th; their exponents must be zero.
    Term truncated(std::size_t m) const {
        assert(max_var() <= m);
        Term t;
        t.e_.assign(e_.begin(), e_.begin() + static_cast<long>(m));
        return t;
    }

    friend bool operator==(const Term& a, const Term& b) { return a.e_ == b.e_; }

    friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
        assert(a.nvars() == b.nvars());
        for (std::size_t i = a.e_.size(); i > 0; --i) {
            if (a.e_[i - 1] != b.e_[i - 1])
                return a.e_[i - 1] <=> b.e_[i - 1];
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<unsigned> e_;
};

// All terms t/xi with a positive xi-exponent, variable index ascending.
inline std::vector<Term> predecessors(const Term& t) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < t.nvars(); ++i)
        if (t.exp(i) > 0)
            out.push_back(t.divided_by_var(i));
    return out;
}

// "x1^2*x2" style rendering; the empty product renders as "1".
inline std::string render_term(const Term& t) {
    std::string out;
    for (std::size_t i = 0; i < t.nvars(); ++i) {
        if (t.exp(i) == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += "x" + std::to_string(i + 1);
        if (t.exp(i) > 1)
            out += "^" + std::to_string(t.exp(i));
    }
    return out.empty() ? "1" : out;
}

} // namespace lexideal

#endif // LEXIDEAL_TERM_HPP
