#ifndef LEXIDEAL_TESTS_TESTUTIL_HPP
#define LEXIDEAL_TESTS_TESTUTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "lexideal/lexideal.hpp"

namespace testutil {

using lexideal::Escalier;
using lexideal::Point;
using lexideal::PointList;
using lexideal::Polynomial;
using lexideal::Rational;
using lexideal::Term;
using lexideal::TermSet;

inline Rational q(long long n) { return Rational(n); }
inline Rational q(long long n, long long d) { return Rational(n, d); }

inline Point<Rational> pt(std::initializer_list<long long> cs) {
    Point<Rational> p;
    for (long long c : cs)
        p.emplace_back(c);
    return p;
}

inline PointList<Rational> pts(
    std::initializer_list<std::initializer_list<long long>> rows) {
    PointList<Rational> out;
    for (const auto& r : rows)
        out.push_back(pt(r));
    return out;
}

// Polynomial from (coefficient, exponents) pairs.
inline Polynomial<Rational> poly(
    std::initializer_list<std::pair<Rational, std::vector<unsigned>>> monos) {
    Polynomial<Rational> p;
    for (const auto& [c, e] : monos)
        p.add_term(Term(e), c);
    return p;
}

// Random list of distinct points with coordinates in 0..maxcoord. The count
// is silently capped by the number of distinct points available.
inline PointList<Rational> random_points(std::mt19937_64& rng, std::size_t n,
                                         std::size_t count, long long maxcoord) {
    double capacity = 1.0;
    for (std::size_t i = 0; i < n && capacity < 1e6; ++i)
        capacity *= static_cast<double>(maxcoord + 1);
    count = std::min<std::size_t>(count, static_cast<std::size_t>(capacity));
    std::uniform_int_distribution<long long> dist(0, maxcoord);
    PointList<Rational> out;
    while (out.size() < count) {
        Point<Rational> p;
        for (std::size_t i = 0; i < n; ++i)
            p.emplace_back(dist(rng));
        bool dup = false;
        for (const auto& q : out)
            if (q == p) {
                dup = true;
                break;
            }
        if (!dup)
            out.push_back(std::move(p));
    }
    return out;
}

// Random order ideal built by repeatedly adjoining a term whose predecessors
// are already present; not necessarily the escalier of any point set.
inline TermSet random_order_ideal(std::mt19937_64& rng, std::size_t n,
                                  std::size_t size, unsigned maxdeg) {
    TermSet ideal;
    ideal.insert(Term(n));
    std::uniform_int_distribution<std::size_t> pick_var(0, n - 1);
    for (int tries = 0; ideal.size() < size && tries < 10000; ++tries) {
        // random walk up from a random member
        auto it = ideal.begin();
        std::advance(it, static_cast<long>(
                             std::uniform_int_distribution<std::size_t>(
                                 0, ideal.size() - 1)(rng)));
        Term cand = it->times_var(pick_var(rng));
        if (cand.total_degree() > maxdeg || ideal.count(cand))
            continue;
        bool ok = true;
        for (const Term& p : lexideal::predecessors(cand))
            if (!ideal.count(p)) {
                ok = false;
                break;
            }
        if (ok)
            ideal.insert(cand);
    }
    return ideal;
}

} // namespace testutil

#endif // LEXIDEAL_TESTS_TESTUTIL_HPP
