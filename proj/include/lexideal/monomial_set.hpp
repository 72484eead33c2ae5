#ifndef LEXIDEAL_MONOMIAL_SET_HPP
#define LEXIDEAL_MONOMIAL_SET_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "error.hpp"
#include "term.hpp"

namespace lexideal {

// Lex-ordered set of terms.
using TermSet = std::set<Term>;

namespace detail {

inline void terms_of_degree_rec(std::size_t nvars, unsigned d,
                                std::vector<unsigned>& acc,
                                std::vector<Term>& out) {
    if (nvars == 0) {
        if (d == 0)
            out.emplace_back(acc);
        return;
    }
    if (nvars == 1) {
        acc[0] = d;
        out.emplace_back(acc);
        acc[0] = 0;
        return;
    }
    // Ascending exponent on the highest remaining variable keeps the whole
    // enumeration lex-ascending.
    for (unsigned e = 0; e <= d; ++e) {
        acc[nvars - 1] = e;
        terms_of_degree_rec(nvars - 1, d - e, acc, out);
    }
    acc[nvars - 1] = 0;
}

} // namespace detail

// Every term in `nvars` variables of total degree exactly d, lex ascending.
// There are C(nvars + d - 1, nvars - 1) of them.
inline std::vector<Term> terms_of_degree(std::size_t nvars, unsigned d) {
    if (nvars == 0)
        throw ValidationError("terms_of_degree requires at least one variable");
    std::vector<Term> out;
    std::vector<unsigned> acc(nvars, 0);
    detail::terms_of_degree_rec(nvars, d, acc, out);
    return out;
}

// An order ideal (staircase) is closed under taking predecessors.
// The empty set qualifies vacuously.
inline bool is_order_ideal(const TermSet& s) {
    for (const Term& t : s)
        for (const Term& p : predecessors(t))
            if (!s.count(p))
                return false;
    return true;
}

// Reference computation of the minimal monomial generators of the semigroup
// ideal complementary to the order ideal N: scan every term of degree up to
// maxdeg(N) + 1 and keep those outside N whose predecessors all lie in N.
// Deliberately brute force; serves as an independent oracle for the
// staircase-walking implementation.
inline std::vector<Term> minimal_generators_bruteforce(std::size_t nvars,
                                                       const TermSet& N) {
    if (!is_order_ideal(N))
        throw ValidationError("minimal generators require an order ideal");
    int h = -1;
    for (const Term& t : N)
        h = std::max(h, static_cast<int>(t.total_degree()));
    std::vector<Term> gens;
    for (int d = 0; d <= h + 1; ++d) {
        for (const Term& t : terms_of_degree(nvars, static_cast<unsigned>(d))) {
            if (N.count(t))
                continue;
            bool all_in = true;
            for (const Term& p : predecessors(t))
                if (!N.count(p)) {
                    all_in = false;
                    break;
                }
            if (all_in)
                gens.push_back(t);
        }
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

} // namespace lexideal

#endif // LEXIDEAL_MONOMIAL_SET_HPP
