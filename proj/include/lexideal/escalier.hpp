#ifndef LEXIDEAL_ESCALIER_HPP
#define LEXIDEAL_ESCALIER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "monomial_set.hpp"
#include "point.hpp"
#include "term.hpp"

namespace lexideal {

// How the k-th escalier term was derived: the branch coordinate sigma
// (1-based variable index), the 1-based position of the antecedent point,
// and — when the recursive lower-coordinate step ran — the 1-based positions
// of the point subsequence it recursed on (query point included, last).
// The first point has no derivation: sigma == antecedent == 0.
struct EscalierStep {
    std::size_t sigma = 0;
    std::size_t antecedent = 0;
    std::vector<std::size_t> wset;
};

// The Groebner escalier of a point list: terms[k] is the monomial matched to
// the (k+1)-th point. The matching is a bijection, the term set is an order
// ideal, and prefixes of the point list map to prefixes of `terms`.
struct Escalier {
    std::vector<Term> terms;
    std::vector<EscalierStep> steps;

    std::size_t size() const { return terms.size(); }

    TermSet term_set() const { return TermSet(terms.begin(), terms.end()); }

    // Position (0-based) of the point matched to t, if any.
    std::optional<std::size_t> index_of(const Term& t) const {
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (terms[i] == t)
                return i;
        return std::nullopt;
    }
};

namespace detail {

template <class K>
std::size_t common_prefix_len(const Point<K>& a, const Point<K>& b) {
    std::size_t k = 0;
    while (k < a.size() && a[k] == b[k])
        ++k;
    return k;
}

template <class K>
std::vector<Term> cemu_terms(const PointList<K>& pts,
                             std::vector<EscalierStep>* steps);

// Term for pts[target] given the terms already assigned to pts[0..target-1].
template <class K>
Term cemu_assign(const PointList<K>& pts, const std::vector<Term>& prior,
                 std::size_t target, EscalierStep* step) {
    const std::size_t n = pts[target].size();
    if (target == 0)
        return Term(n);

    // Branch coordinate: one past the longest coordinate prefix shared with
    // an earlier point. Distinctness keeps it within 1..n.
    std::size_t s = 0;
    for (std::size_t j = 0; j < target; ++j)
        s = std::max(s, common_prefix_len(pts[j], pts[target]));
    if (s >= n)
        throw ValidationError("duplicate points at positions " +
                              std::to_string(target + 1) + " and earlier");
    s += 1; // 1-based variable index

    // Antecedent: latest earlier point sharing the first s-1 coordinates
    // whose term uses no variable above the s-th.
    std::size_t ante = target;
    for (std::size_t j = target; j > 0; --j) {
        const std::size_t i = j - 1;
        if (common_prefix_len(pts[i], pts[target]) < s - 1)
            continue;
        if (prior[i].max_var() <= s) {
            ante = i;
            break;
        }
    }
    if (ante == target)
        throw InternalError("no antecedent found (escalier invariant broken)");

    std::vector<unsigned> e(n, 0);
    e[s - 1] = prior[ante].exp(s - 1) + 1;

    std::vector<std::size_t> wset;
    if (s > 1) {
        // Points whose terms agree with the partially built result on
        // coordinates s..n, in input order, query point last; the escalier of
        // their (s-1)-coordinate projections fixes the lower exponents.
        PointList<K> q;
        for (std::size_t j = 0; j < target; ++j) {
            if (prior[j].exp(s - 1) == e[s - 1] && prior[j].max_var() <= s) {
                wset.push_back(j + 1);
                q.push_back(project_point(pts[j], s - 1));
            }
        }
        wset.push_back(target + 1);
        q.push_back(project_point(pts[target], s - 1));
        for (std::size_t a = 0; a < q.size(); ++a)
            for (std::size_t b = a + 1; b < q.size(); ++b)
                if (q[a] == q[b])
                    throw InternalError(
                        "recursive projections collide (escalier invariant broken)");
        std::vector<Term> sub = cemu_terms<K>(q, nullptr);
        const Term& low = sub.back();
        for (std::size_t i = 0; i + 1 < s; ++i)
            e[i] = low.exp(i);
    }

    if (step) {
        step->sigma = s;
        step->antecedent = ante + 1;
        step->wset = std::move(wset);
    }
    return Term(e);
}

template <class K>
std::vector<Term> cemu_terms(const PointList<K>& pts,
                             std::vector<EscalierStep>* steps) {
    std::vector<Term> terms;
    terms.reserve(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        EscalierStep step;
        terms.push_back(cemu_assign(pts, terms, k, steps ? &step : nullptr));
        if (steps)
            steps->push_back(std::move(step));
    }
    return terms;
}

} // namespace detail

// Branch coordinate of `p` against the earlier points: 1 + the longest
// shared coordinate prefix. Errors if p duplicates an earlier point.
// With no earlier points the value is 1.
template <class K>
std::size_t sigma_value(const PointList<K>& priors, const Point<K>& p) {
    if (p.empty())
        throw ValidationError("points need at least one coordinate");
    std::size_t s = 0;
    for (std::size_t j = 0; j < priors.size(); ++j) {
        if (priors[j].size() != p.size())
            throw ValidationError("point dimension mismatch");
        if (priors[j] == p)
            throw ValidationError("point duplicates position " + std::to_string(j + 1));
        s = std::max(s, detail::common_prefix_len(priors[j], p));
    }
    return s + 1;
}

// Match each point (in order) with a monomial so that the resulting term
// set is the lex Groebner escalier of the vanishing ideal of the points
// seen so far.
template <class K>
Escalier cemu(const PointList<K>& pts) {
    validate_point_list(pts);
    Escalier e;
    e.terms = detail::cemu_terms<K>(pts, &e.steps);
    // The matching must be a bijection onto an order ideal.
    TermSet set(e.terms.begin(), e.terms.end());
    if (set.size() != e.terms.size())
        throw InternalError("escalier terms collide (invariant broken)");
    if (!is_order_ideal(set))
        throw InternalError("escalier is not an order ideal (invariant broken)");
    return e;
}

} // namespace lexideal

#endif // LEXIDEAL_ESCALIER_HPP
