// End-to-end acceptance suite. Each test covers one release criterion and
// prints a single [criterion N] PASS/FAIL line; timings are asserted inside
// the tests themselves.

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <tuple>

#include "golden.hpp"
#include "testutil.hpp"

using namespace lexideal;
using testutil::poly;
using testutil::pts;
using testutil::q;

namespace {

using Clock = std::chrono::steady_clock;
using Idx = std::vector<std::size_t>;
using Terms = std::vector<Term>;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int criterion) {
    std::cout << "[criterion " << criterion << "] "
              << (::testing::Test::HasFailure() ? "FAIL" : "PASS") << "\n";
}

struct DeltaExp {
    Idx points;
    Terms support;
    Idx survivors;
};

struct StageExp {
    std::size_t var;
    Idx entering;
    Terms admissible;
    std::vector<DeltaExp> deltas;
};

struct ElemExp {
    Term tau;
    // (variable, delta, body)
    std::vector<std::tuple<std::size_t, std::size_t, Polynomial<Rational>>> factors;
    std::vector<StageExp> stages;
};

std::vector<ElemExp> nine_point_expectation() {
    const Idx all9 = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    const Terms pure1 = {Term({0, 0, 0}), Term({1, 0, 0}), Term({2, 0, 0}),
                         Term({3, 0, 0})};
    const Terms low2 = {Term({0, 0, 0}), Term({1, 0, 0}), Term({2, 0, 0}),
                        Term({3, 0, 0}), Term({0, 1, 0}), Term({1, 1, 0})};
    Terms low3 = low2;
    low3.push_back(Term({0, 0, 1}));
    Terms esc9 = low2;
    esc9.push_back(Term({0, 0, 1}));
    esc9.push_back(Term({0, 1, 1}));
    esc9.push_back(Term({0, 0, 2}));
    Terms sup5 = pure1;
    sup5.push_back(Term({0, 1, 0}));

    auto lin1 = [](long long a) { // x1 - a
        return poly({{q(1), {1, 0, 0}}, {q(-a), {0, 0, 0}}});
    };

    std::vector<ElemExp> exp(6);

    exp[0].tau = Term({4, 0, 0});
    exp[0].factors = {{1, 1, lin1(4)}, {1, 2, lin1(2)}, {1, 3, lin1(3)},
                      {1, 4, lin1(1)}};
    exp[0].stages = {
        {1, all9, pure1,
         {{{1}, {}, {2, 3, 4, 5, 6, 7, 8, 9}},
          {{2}, {}, {4, 6, 9}},
          {{4}, {}, {6, 9}},
          {{6}, {}, {}}}},
        {2, {}, {}, {}},
    };

    exp[1].tau = Term({2, 1, 0});
    exp[1].factors = {{1, 1, lin1(2)},
                      {1, 2, lin1(1)},
                      {2, 1, poly({{q(1), {0, 1, 0}}})}};
    exp[1].stages = {
        {1, all9, {Term({0, 0, 0}), Term({1, 0, 0})},
         {{{3}, {}, {1, 4, 6, 9}}, {{9}, {}, {1, 4}}}},
        {2, {1, 4}, low2,
         {{{1, 4}, {Term({0, 0, 0}), Term({1, 0, 0})}, {}}}},
    };

    exp[2].tau = Term({0, 2, 0});
    exp[2].factors = {
        {2, 1, poly({{q(1), {0, 1, 0}}, {q(-4), {1, 0, 0}}, {q(4), {0, 0, 0}}})},
        {2, 2, poly({{q(1), {0, 1, 0}},
                     {q(-1, 2), {2, 0, 0}},
                     {q(7, 2), {1, 0, 0}},
                     {q(-6), {0, 0, 0}}})}};
    exp[2].stages = {
        {2, all9, low2,
         {{{3, 9}, {Term({0, 0, 0}), Term({1, 0, 0})}, {1, 2, 4, 5, 6}},
          {{1, 2, 4, 6}, pure1, {}}}},
    };

    exp[3].tau = Term({1, 0, 1});
    exp[3].factors = {{1, 1, lin1(2)},
                      {3, 1, poly({{q(1), {0, 0, 1}},
                                   {q(-2, 3), {0, 1, 0}},
                                   {q(1, 6), {2, 0, 0}},
                                   {q(-1, 6), {1, 0, 0}},
                                   {q(-2), {0, 0, 0}}})}};
    exp[3].stages = {
        {1, all9, {Term({0, 0, 0})}, {{{5}, {}, {1, 4, 6, 9}}}},
        {2, {1, 4, 6, 9}, {Term({0, 0, 0})}, {}},
        {3, {1, 4, 6, 9}, low3,
         {{{1, 4, 6, 9},
           {Term({0, 0, 0}), Term({1, 0, 0}), Term({2, 0, 0}), Term({0, 1, 0})},
           {}}}},
    };

    exp[4].tau = Term({0, 1, 2});
    exp[4].factors = {
        {2, 1, poly({{q(1), {0, 1, 0}}, {q(-4), {0, 0, 0}}})},
        {3, 1, poly({{q(1), {0, 0, 1}}, {q(-3), {0, 0, 0}}})},
        {3, 2, poly({{q(1), {0, 0, 1}},
                     {q(-2, 3), {0, 1, 0}},
                     {q(-5, 6), {3, 0, 0}},
                     {q(41, 6), {2, 0, 0}},
                     {q(-16), {1, 0, 0}},
                     {q(8), {0, 0, 0}}})}};
    exp[4].stages = {
        {2, all9, {Term({0, 0, 0})},
         {{{8}, {Term({0, 0, 0})}, {1, 2, 4, 5, 6, 9}}}},
        {3, {1, 2, 4, 5, 6, 9}, esc9,
         {{{5}, {Term({0, 0, 0})}, {1, 2, 4, 6, 9}},
          {{1, 2, 4, 6, 9}, sup5, {}}}},
    };

    exp[5].tau = Term({0, 0, 3});
    exp[5].factors = {
        {3, 1, poly({{q(1), {0, 0, 1}}, {q(-2), {0, 0, 0}}})},
        {3, 2, poly({{q(1), {0, 0, 1}}, {q(-3), {0, 0, 0}}})},
        {3, 3, poly({{q(1), {0, 0, 1}},
                     {q(4, 3), {0, 1, 0}},
                     {q(-5, 6), {3, 0, 0}},
                     {q(35, 6), {2, 0, 0}},
                     {q(-9), {1, 0, 0}},
                     {q(-4), {0, 0, 0}}})}};
    exp[5].stages = {
        {2, all9, {}, {}},
        {3, all9, esc9,
         {{{8}, {Term({0, 0, 0})}, {1, 2, 3, 4, 5, 6, 7}},
          {{5, 7}, {Term({0, 0, 0}), Term({0, 1, 0})}, {1, 2, 3, 4, 6}},
          {{1, 2, 3, 4, 6}, sup5, {}}}},
    };

    return exp;
}

} // namespace

// Criterion 1: the fixed 9-point instance reproduces the full derivation
// trace — per-point branch data, the minimal generators, every intermediate
// set of the factorization, and every factor (monic) — in under a second.
TEST(Acceptance, Criterion1NinePointGolden) {
    const auto t0 = Clock::now();
    const auto& X = golden::nine_points();

    // point-to-term matching with derivation steps
    auto esc = cemu(X);
    EXPECT_EQ(esc.terms, golden::nine_escalier());
    ASSERT_EQ(esc.steps.size(), 9u);
    const std::vector<std::tuple<std::size_t, std::size_t, Idx>> steps = {
        {0, 0, {}},  {1, 1, {}},     {2, 2, {3}},
        {1, 2, {}},  {3, 2, {5}},    {1, 4, {}},
        {3, 3, {5, 7}}, {3, 7, {8}}, {2, 6, {3, 9}},
    };
    for (std::size_t i = 0; i < steps.size(); ++i) {
        EXPECT_EQ(esc.steps[i].sigma, std::get<0>(steps[i])) << "P" << i + 1;
        EXPECT_EQ(esc.steps[i].antecedent, std::get<1>(steps[i])) << "P" << i + 1;
        EXPECT_EQ(esc.steps[i].wset, std::get<2>(steps[i])) << "P" << i + 1;
    }

    // minimal generators
    EXPECT_EQ(minimal_basis(esc), golden::nine_generators());

    // factorization with its complete trace
    auto fgb = axis_of_evil(X);
    auto expect = nine_point_expectation();
    ASSERT_EQ(fgb.elements.size(), expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        const auto& got = fgb.elements[i];
        const auto& want = expect[i];
        EXPECT_EQ(got.tau, want.tau);
        ASSERT_EQ(got.factors.size(), want.factors.size())
            << render_term(want.tau);
        for (std::size_t k = 0; k < want.factors.size(); ++k) {
            EXPECT_EQ(got.factors[k].var, std::get<0>(want.factors[k]));
            EXPECT_EQ(got.factors[k].delta, std::get<1>(want.factors[k]));
            EXPECT_EQ(got.factors[k].poly, std::get<2>(want.factors[k]))
                << render_term(want.tau) << " factor " << k + 1;
        }
        ASSERT_EQ(got.stages.size(), want.stages.size()) << render_term(want.tau);
        for (std::size_t s = 0; s < want.stages.size(); ++s) {
            const auto& gs = got.stages[s];
            const auto& ws = want.stages[s];
            EXPECT_EQ(gs.var, ws.var);
            EXPECT_EQ(gs.entering, ws.entering);
            EXPECT_EQ(gs.admissible, ws.admissible)
                << render_term(want.tau) << " stage " << ws.var;
            ASSERT_EQ(gs.deltas.size(), ws.deltas.size());
            for (std::size_t d = 0; d < ws.deltas.size(); ++d) {
                EXPECT_EQ(gs.deltas[d].delta, d + 1);
                EXPECT_EQ(gs.deltas[d].points, ws.deltas[d].points);
                EXPECT_EQ(gs.deltas[d].support, ws.deltas[d].support);
                EXPECT_EQ(gs.deltas[d].survivors, ws.deltas[d].survivors);
            }
        }
    }

    const double elapsed = ms_since(t0);
    EXPECT_LT(elapsed, 1000.0);
    report(1);
}

// Criterion 2: the staircase walk on the fixed 8-term order ideal finds
// exactly the four expected generators, in well under a tenth of a second.
TEST(Acceptance, Criterion2StaircaseWalk) {
    const auto t0 = Clock::now();
    const TermSet N = {Term({0, 0, 0}), Term({1, 0, 0}), Term({0, 1, 0}),
                       Term({0, 0, 1}), Term({0, 1, 1}), Term({1, 0, 1}),
                       Term({2, 0, 0}), Term({2, 0, 1})};
    const Terms expect = {Term({3, 0, 0}), Term({1, 1, 0}), Term({0, 2, 0}),
                          Term({0, 0, 2})};
    EXPECT_EQ(minimal_basis(3, N), expect);
    EXPECT_EQ(minimal_generators_bruteforce(3, N), expect);

    const double elapsed = ms_since(t0);
    EXPECT_LT(elapsed, 100.0);
    report(2);
}

// Criterion 3: expanding and inter-reducing the factored basis of the
// 9-point instance reproduces the evaluation oracle's reduced basis
// coefficient for coefficient.
TEST(Acceptance, Criterion3ReducedCrossCheck) {
    const auto t0 = Clock::now();
    const auto& X = golden::nine_points();

    auto reduced = reduce_basis(expand(axis_of_evil(X)));
    auto oracle = moeller_gb(X);
    ASSERT_EQ(reduced.size(), oracle.basis.size());
    for (std::size_t i = 0; i < reduced.size(); ++i)
        EXPECT_EQ(reduced[i], oracle.basis[i]) << "element " << i + 1;
    EXPECT_EQ(reduced, golden::nine_reduced_basis());

    const double elapsed = ms_since(t0);
    EXPECT_LT(elapsed, 1000.0);
    report(3);
}

// Criterion 4: 500 random instances, n in 1..4, up to 20 points with
// coordinates in 0..6, exact arithmetic throughout, under a minute:
// matching/staircase invariants, factorization invariants, certificates,
// S-polynomial closure, elimination, and order-(in)dependence properties.
TEST(Acceptance, Criterion4PropertySuite) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20260814);
    constexpr int kInstances = 500;

    for (int it = 0; it < kInstances; ++it) {
        const std::size_t n = 1 + static_cast<std::size_t>(it) % 4;
        const std::size_t want = 1 + static_cast<std::size_t>(rng() % 20);
        const auto X = testutil::random_points(rng, n, want, 6);

        // matching: bijection onto an order ideal, stable under prefixes
        const auto esc = cemu(X);
        ASSERT_EQ(esc.size(), X.size());
        const TermSet eset = esc.term_set();
        ASSERT_EQ(eset.size(), X.size());
        ASSERT_TRUE(is_order_ideal(eset));
        for (std::size_t k = 1; k < X.size(); ++k) {
            PointList<Rational> head(X.begin(), X.begin() + static_cast<long>(k));
            const auto sub = cemu(head);
            for (std::size_t i = 0; i < k; ++i)
                ASSERT_EQ(sub.terms[i], esc.terms[i]);
        }

        // staircase generators against the brute-force enumeration
        const auto G = minimal_basis(esc);
        ASSERT_EQ(G, minimal_generators_bruteforce(n, eset));
        unsigned h = 0;
        for (const Term& t : eset)
            h = std::max(h, t.total_degree());
        for (const Term& g : G)
            ASSERT_LE(g.total_degree(), h + 1);

        // factorization: leading terms, monic factors, counts, vanishing
        const auto fgb = axis_of_evil(X);
        const auto expanded = expand(fgb);
        ASSERT_EQ(fgb.generators, G);
        ASSERT_EQ(expanded.size(), G.size());
        ASSERT_TRUE(check_vanishing(expanded, X).ok);
        for (std::size_t i = 0; i < G.size(); ++i) {
            ASSERT_EQ(expanded[i].leading_term(), G[i]);
            ASSERT_EQ(expanded[i].leading_coeff(), Rational(1));
        }
        for (const auto& e : fgb.elements) {
            std::vector<unsigned> counts(n, 0);
            for (const auto& f : e.factors) {
                ASSERT_EQ(f.poly.leading_term(), Term(n).times_var(f.var - 1));
                ASSERT_EQ(f.poly.leading_coeff(), Rational(1));
                ++counts[f.var - 1];
            }
            for (std::size_t i = 0; i < n; ++i)
                ASSERT_EQ(counts[i], e.tau.exp(i));
        }
        ASSERT_TRUE(gb_certificate(fgb).valid());

        // reduced basis closure on the smaller instances
        const auto reduced = reduce_basis(expanded);
        ASSERT_EQ(reduced, moeller_gb(X).basis);
        if (n <= 3 && X.size() <= 12) {
            ASSERT_TRUE(spoly_check(reduced).ok);
        }

        // a lex basis eliminates from the top for every split
        for (std::size_t j = 1; j < n; ++j)
            ASSERT_TRUE(elimination_check(reduced, X, j).ok);

        // the term set ignores the input order
        auto shuffled = X;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        ASSERT_EQ(cemu(shuffled).term_set(), eset);

        // per-target factorizations ignore the target processing order
        if (!G.empty()) {
            auto order = G;
            std::shuffle(order.begin(), order.end(), rng);
            for (const Term& tau : order) {
                const auto pos = static_cast<std::size_t>(
                    std::find(G.begin(), G.end(), tau) - G.begin());
                const auto elem = factor_element<Rational>(X, esc, tau);
                ASSERT_EQ(elem.factors.size(),
                          fgb.elements[pos].factors.size());
                for (std::size_t k = 0; k < elem.factors.size(); ++k)
                    ASSERT_EQ(elem.factors[k].poly,
                              fgb.elements[pos].factors[k].poly);
            }
        }
    }

    const double elapsed = ms_since(t0);
    EXPECT_LT(elapsed, 60000.0);
    report(4);
}

// Criterion 5: the degree-slice enumerator has the right cardinality for
// every n <= 5, d <= 8.
TEST(Acceptance, Criterion5SliceCounts) {
    auto binom = [](unsigned long long a, unsigned long long b) {
        if (b > a)
            return 0ull;
        unsigned long long r = 1;
        for (unsigned long long i = 0; i < b; ++i)
            r = r * (a - i) / (i + 1);
        return r;
    };
    for (std::size_t n = 1; n <= 5; ++n) {
        for (unsigned d = 0; d <= 8; ++d) {
            const auto slice = terms_of_degree(n, d);
            EXPECT_EQ(slice.size(), binom(n + d - 1, n - 1))
                << "n=" << n << " d=" << d;
            EXPECT_TRUE(std::is_sorted(slice.begin(), slice.end()));
            for (const Term& t : slice)
                EXPECT_EQ(t.total_degree(), d);
        }
    }
    report(5);
}
