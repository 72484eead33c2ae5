#ifndef LEXIDEAL_MINIMAL_BASIS_HPP
#define LEXIDEAL_MINIMAL_BASIS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "error.hpp"
#include "escalier.hpp"
#include "monomial_set.hpp"
#include "term.hpp"

namespace lexideal {

// One expansion step of a homogeneous slice: the terms of the next degree all
// of whose predecessors lie in H. All input terms must share one total degree.
inline std::vector<Term> potential_expansion_step(const TermSet& H) {
    if (H.empty())
        return {};
    const unsigned d = H.begin()->total_degree();
    for (const Term& t : H)
        if (t.total_degree() != d)
            throw ValidationError("expansion step needs terms of equal degree");
    TermSet candidates;
    for (const Term& t : H)
        for (std::size_t i = 0; i < t.nvars(); ++i)
            candidates.insert(t.times_var(i));
    std::vector<Term> out;
    for (const Term& c : candidates) {
        bool ok = true;
        for (const Term& p : predecessors(c))
            if (!H.count(p)) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(c);
    }
    return out; // TermSet iteration is lex ascending already
}

// Minimal monomial generators of the semigroup ideal complementary to the
// order ideal N, by walking the staircase degree by degree. Each degree d
// splits into three disjoint parts: N's slice, the slice C of multiples of
// generators found earlier, and the new generators (everything else). C is
// then pushed one degree up through all variables. Terms above
// maxdeg(N) + 1 are all multiples, so the walk stops there.
inline std::vector<Term> minimal_basis(std::size_t nvars, const TermSet& N) {
    if (nvars == 0)
        throw ValidationError("minimal basis requires at least one variable");
    if (!is_order_ideal(N))
        throw ValidationError("minimal basis requires an order ideal");
    for (const Term& t : N)
        if (t.nvars() != nvars)
            throw ValidationError("term dimension mismatch");

    int h = -1;
    std::map<unsigned, TermSet> slices;
    for (const Term& t : N) {
        slices[t.total_degree()].insert(t);
        h = std::max(h, static_cast<int>(t.total_degree()));
    }

    std::vector<Term> gens;
    TermSet multiples; // ideal slice at the current degree
    for (int d = 0; d <= h + 1; ++d) {
        const std::vector<Term> all = terms_of_degree(nvars, static_cast<unsigned>(d));
        const TermSet& slice = slices[static_cast<unsigned>(d)];
        std::vector<Term> new_gens;
        for (const Term& t : all) {
            const bool in_n = slice.count(t) > 0;
            const bool in_c = multiples.count(t) > 0;
            if (in_n && in_c)
                throw InternalError("escalier term inside the ideal (invariant broken)");
            if (!in_n && !in_c)
                new_gens.push_back(t);
        }
        // everything known to be in the ideal moves up one degree
        TermSet next;
        for (const Term& t : multiples)
            for (std::size_t i = 0; i < nvars; ++i)
                next.insert(t.times_var(i));
        for (const Term& t : new_gens)
            for (std::size_t i = 0; i < nvars; ++i)
                next.insert(t.times_var(i));
        multiples = std::move(next);
        gens.insert(gens.end(), new_gens.begin(), new_gens.end());
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

inline std::vector<Term> minimal_basis(const Escalier& e) {
    if (e.terms.empty())
        throw ValidationError("empty escalier");
    return minimal_basis(e.terms[0].nvars(), e.term_set());
}

} // namespace lexideal

#endif // LEXIDEAL_MINIMAL_BASIS_HPP
