#ifndef LEXIDEAL_VERIFY_HPP
#define LEXIDEAL_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "axis_of_evil.hpp"
#include "error.hpp"
#include "minimal_basis.hpp"
#include "moeller.hpp"
#include "point.hpp"
#include "polynomial.hpp"
#include "term.hpp"

namespace lexideal {

template <class K>
struct VanishWitness {
    std::size_t poly;  // 1-based index into the checked list
    std::size_t point; // 1-based index into the point list
    K value;
};

template <class K>
struct VanishReport {
    bool ok = true;
    std::vector<VanishWitness<K>> witnesses;
};

// Evaluate every polynomial at every point; nonzero values are reported.
template <class K>
VanishReport<K> check_vanishing(const std::vector<Polynomial<K>>& polys,
                                const PointList<K>& X) {
    validate_point_list(X);
    VanishReport<K> rep;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = 0; j < X.size(); ++j) {
            const K v = polys[i].evaluate(X[j]);
            if (!v.is_zero()) {
                rep.ok = false;
                rep.witnesses.push_back({i + 1, j + 1, v});
            }
        }
    }
    return rep;
}

template <class K>
struct SpolyFailure {
    std::size_t first = 0, second = 0; // 1-based pair
    Polynomial<K> remainder;
};

template <class K>
struct SpolyReport {
    bool ok = true;
    std::vector<SpolyFailure<K>> failures;
};

// Buchberger criterion: every S-polynomial reduces to zero against the basis.
template <class K>
SpolyReport<K> spoly_check(const std::vector<Polynomial<K>>& basis) {
    for (const auto& f : basis)
        if (f.is_zero())
            throw ValidationError("zero polynomial in basis");
    SpolyReport<K> rep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Polynomial<K> r = normal_form(s_polynomial(basis[i], basis[j]), basis);
            if (!r.is_zero()) {
                rep.ok = false;
                rep.failures.push_back({i + 1, j + 1, std::move(r)});
            }
        }
    }
    return rep;
}

// Machine-checkable certificate for a factored basis: the expanded products
// vanish on the points, their leading terms are exactly the minimal
// generators above the evaluation-computed escalier, and the escalier is as
// large as the point list. The S-polynomial test is optional (quadratic).
template <class K>
struct GBCertificate {
    bool vanishing_ok = false;
    std::vector<VanishWitness<K>> witnesses;

    bool leading_terms_ok = false;
    std::vector<Term> expected_leading_terms;
    std::vector<Term> actual_leading_terms;

    bool cardinality_ok = false;
    std::size_t escalier_size = 0;
    std::size_t point_count = 0;

    bool spoly_checked = false;
    bool spoly_ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> spoly_failures;

    bool valid() const {
        return vanishing_ok && leading_terms_ok && cardinality_ok &&
               (!spoly_checked || spoly_ok);
    }
};

namespace detail {

// Plain product of the factors, without the pipeline's leading-term
// assertion: certificates judge untrusted claims, so a wrong leading term
// must surface as a failed check rather than as an internal error.
template <class K>
std::vector<Polynomial<K>> raw_products(const FactoredGroebnerBasis<K>& fgb) {
    std::vector<Polynomial<K>> out;
    out.reserve(fgb.elements.size());
    for (const auto& e : fgb.elements) {
        if (e.factors.empty())
            throw ValidationError("factored element has no factors");
        Polynomial<K> prod = e.factors[0].poly;
        for (std::size_t i = 1; i < e.factors.size(); ++i)
            prod = prod * e.factors[i].poly;
        if (prod.is_zero())
            throw ValidationError("factored element multiplies to zero");
        out.push_back(std::move(prod));
    }
    return out;
}

} // namespace detail

template <class K>
GBCertificate<K> gb_certificate(const FactoredGroebnerBasis<K>& fgb,
                                bool check_spolys = false) {
    validate_point_list(fgb.points);
    GBCertificate<K> cert;

    const std::vector<Polynomial<K>> expanded = detail::raw_products(fgb);
    VanishReport<K> vr = check_vanishing(expanded, fgb.points);
    cert.vanishing_ok = vr.ok;
    cert.witnesses = std::move(vr.witnesses);

    // independent recomputation: evaluation-based escalier and generators
    MoellerResult<K> oracle = moeller_gb(fgb.points);
    cert.escalier_size = fgb.escalier.size();
    cert.point_count = fgb.points.size();
    cert.cardinality_ok = fgb.escalier.size() == fgb.points.size() &&
                          fgb.escalier.term_set() ==
                              TermSet(oracle.escalier.begin(), oracle.escalier.end());

    cert.expected_leading_terms.reserve(oracle.basis.size());
    for (const auto& g : oracle.basis)
        cert.expected_leading_terms.push_back(g.leading_term());
    cert.actual_leading_terms.reserve(expanded.size());
    for (const auto& f : expanded)
        cert.actual_leading_terms.push_back(f.leading_term());
    std::sort(cert.actual_leading_terms.begin(), cert.actual_leading_terms.end());
    std::sort(cert.expected_leading_terms.begin(), cert.expected_leading_terms.end());
    cert.leading_terms_ok =
        cert.actual_leading_terms == cert.expected_leading_terms;

    if (check_spolys) {
        cert.spoly_checked = true;
        SpolyReport<K> sr = spoly_check(expanded);
        cert.spoly_ok = sr.ok;
        for (const auto& f : sr.failures)
            cert.spoly_failures.emplace_back(f.first, f.second);
    }
    return cert;
}

struct EliminationReport {
    bool ok = false;
    std::size_t vars = 0;
    std::size_t kept = 0;    // elements of the basis lying in the subring
    std::size_t expected = 0;
};

// A lex basis eliminates from the top: its elements involving only
// x1..xj must form a basis of the vanishing ideal of the projected
// (deduplicated) points. `reduced` must be the reduced basis.
template <class K>
EliminationReport elimination_check(const std::vector<Polynomial<K>>& reduced,
                                    const PointList<K>& X, std::size_t j) {
    validate_point_list(X);
    const std::size_t n = X[0].size();
    if (j < 1 || j >= n)
        throw ValidationError("elimination index must be in 1..n-1");

    std::vector<Polynomial<K>> kept;
    for (const auto& f : reduced) {
        bool low = true;
        for (const auto& [t, c] : f.terms())
            if (t.max_var() > j) {
                low = false;
                break;
            }
        if (low) {
            Polynomial<K> g;
            for (const auto& [t, c] : f.terms())
                g.add_term(t.truncated(j), c);
            kept.push_back(std::move(g));
        }
    }
    std::sort(kept.begin(), kept.end(),
              [](const Polynomial<K>& a, const Polynomial<K>& b) {
                  return a.leading_term() < b.leading_term();
              });

    MoellerResult<K> oracle = moeller_gb(dedup_points(project_points(X, j)));

    EliminationReport rep;
    rep.vars = j;
    rep.kept = kept.size();
    rep.expected = oracle.basis.size();
    rep.ok = kept == oracle.basis;
    return rep;
}

} // namespace lexideal

#endif // LEXIDEAL_VERIFY_HPP
