#ifndef LEXIDEAL_MOELLER_HPP
#define LEXIDEAL_MOELLER_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "error.hpp"
#include "monomial_set.hpp"
#include "point.hpp"
#include "polynomial.hpp"
#include "term.hpp"

namespace lexideal {

template <class K>
struct MoellerResult {
    std::vector<Term> escalier;          // lex ascending (discovery order)
    std::vector<Polynomial<K>> basis;    // reduced monic, leading term ascending
};

// Evaluation-based Groebner basis of the vanishing ideal of X, independent
// of the combinatorial construction: process candidate terms lex-ascending,
// starting from 1 and pushing variable multiples of each escalier member,
// skipping multiples of leading terms already found (lex is not degree
// compatible, so a plain degree sweep would not terminate). A candidate
// whose evaluation vector is dependent on the escalier's yields a basis
// element; dependencies are found by exact incremental row reduction.
template <class K>
MoellerResult<K> moeller_gb(const PointList<K>& X) {
    validate_point_list(X);
    const std::size_t n = X[0].size();
    const K zero = X[0][0].zero();

    struct Row {
        std::vector<K> vals;
        Polynomial<K> poly;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Term> found_lts;
    MoellerResult<K> out;

    std::set<Term> queue;
    queue.insert(Term(n));
    while (!queue.empty()) {
        const Term t = *queue.begin();
        queue.erase(queue.begin());
        bool in_ideal = false;
        for (const Term& lt : found_lts)
            if (lt.divides(t)) {
                in_ideal = true;
                break;
            }
        if (in_ideal)
            continue;

        std::vector<K> v;
        v.reserve(X.size());
        for (const auto& p : X)
            v.push_back(eval_term(t, p));
        Polynomial<K> poly = Polynomial<K>::monomial(t, zero.one());
        for (const Row& row : rows) {
            if (v[row.pivot].is_zero())
                continue;
            const K f = v[row.pivot] / row.vals[row.pivot];
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] -= f * row.vals[i];
            poly -= row.poly.times_monomial(Term(n), f);
        }

        std::size_t pivot = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == v.size()) {
            // dependent: t minus a combination of smaller escalier terms
            out.basis.push_back(std::move(poly));
            found_lts.push_back(t);
        } else {
            // eliminate the fresh pivot from the old rows so that a single
            // reduction pass against `rows` always zeroes every pivot column
            for (Row& row : rows) {
                if (row.vals[pivot].is_zero())
                    continue;
                const K f = row.vals[pivot] / v[pivot];
                for (std::size_t i = 0; i < row.vals.size(); ++i)
                    row.vals[i] -= f * v[i];
                row.poly -= poly.times_monomial(Term(n), f);
            }
            out.escalier.push_back(t);
            rows.push_back(Row{std::move(v), std::move(poly), pivot});
            for (std::size_t i = 0; i < n; ++i)
                queue.insert(t.times_var(i));
        }
    }

    if (out.escalier.size() != X.size())
        throw InternalError("escalier size differs from the point count");
    return out;
}

} // namespace lexideal

#endif // LEXIDEAL_MOELLER_HPP
