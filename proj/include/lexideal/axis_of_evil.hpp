#ifndef LEXIDEAL_AXIS_OF_EVIL_HPP
#define LEXIDEAL_AXIS_OF_EVIL_HPP

#include <algorithm>
#include <cstddef>
#include <future>
#include <string>
#include <vector>

#include "error.hpp"
#include "escalier.hpp"
#include "linalg.hpp"
#include "minimal_basis.hpp"
#include "monomial_set.hpp"
#include "point.hpp"
#include "polynomial.hpp"
#include "term.hpp"

namespace lexideal {

// One linear factor x_var + (terms below x_var), monic in x_var.
// `var` is 1-based; `delta` counts the factors contributed per variable,
// starting at 1.
template <class K>
struct LinearFactor {
    std::size_t var = 0;
    std::size_t delta = 0;
    Polynomial<K> poly;
};

// Interpolation trace for one factor: the 1-based positions (into the input
// point list) of the interpolation points, the support terms used, and the
// surviving positions after multiplying the factor in.
struct DeltaTrace {
    std::size_t delta = 0;
    std::vector<std::size_t> points;
    std::vector<Term> support;
    std::vector<std::size_t> survivors;
};

// Per-variable stage of a factored element: the survivors entering the
// stage, the admissible-term set used to pick interpolation points, and one
// DeltaTrace per factor. Stage 1 appears only when the variable actually
// occurs in the target monomial; later stages appear until the survivor set
// empties.
struct StageTrace {
    std::size_t var = 0;
    std::vector<std::size_t> entering;
    std::vector<Term> admissible;
    std::vector<DeltaTrace> deltas;
};

template <class K>
struct FactoredElement {
    Term tau;                             // the leading monomial produced
    std::vector<LinearFactor<K>> factors; // variable ascending, delta ascending
    std::vector<StageTrace> stages;
};

template <class K>
struct FactoredGroebnerBasis {
    std::size_t nvars = 0;
    PointList<K> points;
    Escalier escalier;
    std::vector<Term> generators; // lex ascending, one element per entry
    std::vector<FactoredElement<K>> elements;
};

struct FactorOptions {
    bool validate_inputs = true;
    bool parallel = false;
};

// Admissible terms for stage m of target tau: terms omega in the first m
// variables such that omega times tau's upper part (variables > m) lies in
// the escalier strictly below tau. These index the points available to
// interpolate the stage-m factors.
inline std::vector<Term> n_m_set(const Term& tau, const TermSet& escalier,
                                 std::size_t m) {
    const std::size_t n = tau.nvars();
    if (m < 1 || m > n)
        throw ValidationError("stage index out of range");
    if (escalier.count(tau))
        throw ValidationError("target monomial lies inside the escalier");
    const Term tail = tau.upper_part(m);
    std::vector<Term> out;
    for (const Term& t : escalier) {
        if (t.nvars() != n)
            throw ValidationError("term dimension mismatch");
        if (!(t < tau))
            continue;
        if (t.upper_part(m) != tail)
            continue;
        out.push_back(t.projected(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Interpolate the monic-in-x_m linear factor vanishing on A: project A to
// the first m coordinates, let E be the escalier of the projections (which
// must avoid x_m), and solve the square system x_m + sum c_w w = 0 over A.
// The support terms (lex ascending) are reported through `support_out` when
// requested, including those whose solved coefficient is zero.
template <class K>
LinearFactor<K> interpolate_factor(const PointList<K>& A, std::size_t m,
                                   std::vector<Term>* support_out = nullptr) {
    validate_point_list(A);
    const std::size_t n = A[0].size();
    if (m < 1 || m > n)
        throw ValidationError("variable index out of range");

    const PointList<K> proj = project_points(A, m);
    validate_point_list(proj); // distinct projections required
    Escalier esc = cemu(proj);

    std::vector<Term> support;
    support.reserve(esc.terms.size());
    for (const Term& t : esc.terms) {
        if (t.exp(m - 1) > 0)
            throw InternalError(
                "interpolation support touches the target variable");
        support.push_back(t.embedded(n));
    }
    std::sort(support.begin(), support.end());
    if (support_out)
        *support_out = support;

    std::vector<std::vector<K>> M(A.size(), std::vector<K>{});
    std::vector<K> rhs;
    rhs.reserve(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        M[i].reserve(support.size());
        for (const Term& w : support)
            M[i].push_back(eval_term(w, A[i]));
        rhs.push_back(-A[i][m - 1]);
    }
    const std::vector<K> c = solve_square(M, rhs);

    Polynomial<K> poly = Polynomial<K>::monomial(
        Term(n).times_var(m - 1), A[0][0].one());
    for (std::size_t j = 0; j < support.size(); ++j)
        poly.add_term(support[j], c[j]);

    if (poly.leading_term() != Term(n).times_var(m - 1))
        throw InternalError("interpolated factor is not monic in its variable");
    LinearFactor<K> f;
    f.var = m;
    f.poly = std::move(poly);
    return f;
}

// Factor a single target monomial tau over the points, given their escalier.
// Produces exactly tau.exp(i) linear factors monic in x_{i+1} for every i,
// whose product vanishes on all points and has leading term tau.
template <class K>
FactoredElement<K> factor_element(const PointList<K>& X, const Escalier& esc,
                                  const Term& tau) {
    const std::size_t n = tau.nvars();
    const TermSet eset = esc.term_set();
    FactoredElement<K> elem;
    elem.tau = tau;

    auto point_of = [&](const Term& t) -> std::size_t {
        auto idx = esc.index_of(t);
        if (!idx)
            throw InternalError("admissible term missing from the escalier");
        return *idx;
    };

    // survivors: points where the product built so far is nonzero
    std::vector<std::size_t> D(X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
        D[i] = i;
    auto keep_nonzero = [&](const Polynomial<K>& g) {
        std::vector<std::size_t> out;
        for (std::size_t i : D)
            if (!g.evaluate(X[i]).is_zero())
                out.push_back(i);
        D = std::move(out);
    };
    auto one_based = [](const std::vector<std::size_t>& v) {
        std::vector<std::size_t> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = v[i] + 1;
        return out;
    };
    auto require_done_above = [&](std::size_t m) {
        for (std::size_t i = m; i < n; ++i)
            if (tau.exp(i) > 0)
                throw InternalError(
                    "points exhausted before factoring " + render_term(tau));
    };

    for (std::size_t m = 1; m <= n; ++m) {
        const unsigned dm = tau.exp(m - 1);
        if (m == 1 && dm == 0)
            continue; // stage 1 is recorded only when x1 occurs in tau

        StageTrace stage;
        stage.var = m;
        stage.entering = one_based(D);
        if (m >= 2 && D.empty()) {
            // product already vanishes everywhere; nothing above may remain
            require_done_above(m - 1);
            elem.stages.push_back(std::move(stage));
            break;
        }
        stage.admissible = n_m_set(tau, eset, m);

        bool exhausted = false;
        if (m == 1) {
            // batch: one interpolation-free factor per power of x1
            const Term tail = tau.upper_part(1);
            for (unsigned i = 0; i < dm; ++i) {
                Term probe(n);
                for (unsigned e = 0; e < i; ++e)
                    probe = probe.times_var(0);
                const std::size_t idx = point_of(probe * tail);
                const K a = X[idx][0];
                LinearFactor<K> f;
                f.var = 1;
                f.delta = i + 1;
                f.poly = Polynomial<K>::monomial(Term(n).times_var(0), a.one());
                f.poly.add_term(Term(n), -a);
                keep_nonzero(f.poly);
                DeltaTrace dt;
                dt.delta = i + 1;
                dt.points = {idx + 1};
                dt.survivors = one_based(D);
                stage.deltas.push_back(std::move(dt));
                elem.factors.push_back(std::move(f));
            }
        } else {
            for (unsigned delta = 1; delta <= dm; ++delta) {
                // candidate points: admissible terms whose x_m power matches
                // this delta, completed by tau's upper part, looked up in the
                // escalier and intersected with the survivors
                std::vector<std::size_t> cand;
                const Term tail = tau.upper_part(m);
                for (const Term& w : stage.admissible) {
                    if (w.exp(m - 1) != dm - delta)
                        continue;
                    const std::size_t idx = point_of(w * tail);
                    if (std::find(D.begin(), D.end(), idx) != D.end())
                        cand.push_back(idx);
                }
                std::sort(cand.begin(), cand.end());

                LinearFactor<K> f;
                DeltaTrace dt;
                dt.delta = delta;
                dt.points = one_based(cand);
                if (cand.empty()) {
                    // no interpolation conditions left: bare factor x_m
                    f.var = m;
                    f.poly = Polynomial<K>::monomial(Term(n).times_var(m - 1),
                                                     X[0][0].one());
                } else {
                    PointList<K> A;
                    A.reserve(cand.size());
                    for (std::size_t idx : cand)
                        A.push_back(X[idx]);
                    f = interpolate_factor(A, m, &dt.support);
                }
                f.delta = delta;
                keep_nonzero(f.poly);
                dt.survivors = one_based(D);
                stage.deltas.push_back(std::move(dt));
                elem.factors.push_back(std::move(f));
                if (D.empty()) {
                    if (delta < dm)
                        throw InternalError(
                            "points exhausted before factoring " + render_term(tau));
                    require_done_above(m);
                    exhausted = true;
                    break;
                }
            }
        }
        elem.stages.push_back(std::move(stage));
        if (exhausted)
            break;
    }

    // every variable must have received exactly its exponent's worth of factors
    std::vector<unsigned> counts(n, 0);
    for (const auto& f : elem.factors)
        ++counts[f.var - 1];
    for (std::size_t i = 0; i < n; ++i)
        if (counts[i] != tau.exp(i))
            throw InternalError("factor count mismatch for " + render_term(tau));
    if (!D.empty())
        throw InternalError("factored element misses points for " + render_term(tau));
    return elem;
}

// Product of the factors; monic with leading term tau by construction.
template <class K>
Polynomial<K> expand(const FactoredElement<K>& e) {
    if (e.factors.empty())
        throw ValidationError("factored element has no factors");
    Polynomial<K> prod = e.factors[0].poly;
    for (std::size_t i = 1; i < e.factors.size(); ++i)
        prod = prod * e.factors[i].poly;
    if (prod.leading_term() != e.tau)
        throw InternalError("expanded product has the wrong leading term");
    return prod;
}

template <class K>
std::vector<Polynomial<K>> expand(const FactoredGroebnerBasis<K>& fgb) {
    std::vector<Polynomial<K>> out;
    out.reserve(fgb.elements.size());
    for (const auto& e : fgb.elements)
        out.push_back(expand(e));
    return out;
}

// Factorized minimal lex Groebner basis of the vanishing ideal of X: one
// product of linear polynomials per minimal generator of the escalier
// complement. When escalier/generators are supplied they are revalidated
// against a fresh computation unless opts.validate_inputs is cleared.
template <class K>
FactoredGroebnerBasis<K> axis_of_evil(const PointList<K>& X,
                                      const Escalier& esc,
                                      const std::vector<Term>& gens,
                                      FactorOptions opts = {}) {
    validate_point_list(X);
    if (opts.validate_inputs) {
        Escalier fresh = cemu(X);
        if (fresh.terms != esc.terms)
            throw ValidationError("escalier does not match the point list");
        if (minimal_basis(fresh) != gens)
            throw ValidationError("generators do not match the escalier");
    }

    FactoredGroebnerBasis<K> out;
    out.nvars = X[0].size();
    out.points = X;
    out.escalier = esc;
    out.generators = gens;
    out.elements.resize(gens.size());

    if (opts.parallel && gens.size() > 1) {
        std::vector<std::future<FactoredElement<K>>> futs;
        futs.reserve(gens.size());
        for (const Term& tau : gens)
            futs.push_back(std::async(std::launch::async, [&X, &esc, tau] {
                return factor_element<K>(X, esc, tau);
            }));
        for (std::size_t i = 0; i < futs.size(); ++i)
            out.elements[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < gens.size(); ++i)
            out.elements[i] = factor_element<K>(X, esc, gens[i]);
    }
    return out;
}

template <class K>
FactoredGroebnerBasis<K> axis_of_evil(const PointList<K>& X,
                                      FactorOptions opts = {}) {
    validate_point_list(X);
    Escalier esc = cemu(X);
    std::vector<Term> gens = minimal_basis(esc);
    opts.validate_inputs = false; // just computed
    return axis_of_evil(X, esc, gens, opts);
}

// Inter-reduce a minimal basis (pairwise non-divisible leading terms): each
// element keeps its leading term and its tail is reduced against the others,
// yielding the unique reduced monic basis, sorted by leading term.
template <class K>
std::vector<Polynomial<K>> reduce_basis(const std::vector<Polynomial<K>>& basis) {
    if (basis.empty())
        throw ValidationError("empty basis");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero())
            throw ValidationError("zero polynomial in basis");
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (i != j && basis[i].leading_term().divides(basis[j].leading_term()))
                throw ValidationError("basis is not minimal");
    }
    std::vector<Polynomial<K>> monic;
    monic.reserve(basis.size());
    for (const auto& f : basis)
        monic.push_back(f.monic());
    std::vector<Polynomial<K>> out;
    out.reserve(basis.size());
    for (std::size_t i = 0; i < monic.size(); ++i)
        out.push_back(normal_form(monic[i], monic, i));
    std::sort(out.begin(), out.end(),
              [](const Polynomial<K>& a, const Polynomial<K>& b) {
                  return a.leading_term() < b.leading_term();
              });
    return out;
}

} // namespace lexideal

#endif // LEXIDEAL_AXIS_OF_EVIL_HPP
