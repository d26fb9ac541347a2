// One line per acceptance criterion; exit status 1 if any criterion fails.
#include "tbern/padic.hpp"
#include "tbern/symmetry.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace tbern;

namespace {

struct Outcome {
    bool pass = true;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string detail;

    void record(bool ok, const std::string& what)
    {
        ++checks;
        if (ok) {
            return;
        }
        ++failures;
        if (pass) {
            pass = false;
            detail = what;
        }
    }
};

const std::vector<long> kModuli{1, 3, 4, 5};
const std::vector<std::uint32_t> kXiOrders{1, 2, 3, 4};

std::vector<TwistContext> grid_contexts(const std::vector<long>& moduli, bool primitive_only)
{
    std::vector<TwistContext> out;
    for (long d : moduli) {
        for (const auto& chi : enumerate_characters(d)) {
            if (primitive_only && !chi.is_primitive()) {
                continue;
            }
            for (std::uint32_t r : kXiOrders) {
                out.emplace_back(chi, r, 1);
            }
        }
    }
    return out;
}

std::string where(const TwistContext& ctx, const Weights& w, const std::string& extra)
{
    std::ostringstream s;
    s << ctx.describe() << " w=" << w[0] << ',' << w[1] << ',' << w[2] << ' ' << extra;
    return s.str();
}

std::vector<std::pair<Family, int>> quotient_types()
{
    std::vector<std::pair<Family, int>> types;
    for (Family f : {Family::L23, Family::L13, Family::L12}) {
        for (int i = 0; i <= (f == Family::L12 ? 1 : 3); ++i) {
            types.emplace_back(f, i);
        }
    }
    return types;
}

// Classical numbers from sum_{k<=n} C(n+1,k) B_k = 0.
std::vector<Rational> recurrence_bernoulli(unsigned n_max)
{
    std::vector<Rational> b{Rational(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        Rational s(0);
        for (unsigned k = 0; k < n; ++k) {
            s += Rational(binomial(n + 1, k)) * b[k];
        }
        b.push_back(-s / Rational(n + 1));
    }
    return b;
}

Outcome criterion1()
{
    Outcome o;
    const auto oracle = recurrence_bernoulli(12);
    const auto table = bernoulli_numbers(TwistContext(principal_character(1), 1, 0), 12);
    for (unsigned n = 0; n <= 12; ++n) {
        o.record(table.values[n] == CycloNumber(table.values[n].field(), oracle[n]),
                 "B_" + std::to_string(n) + " = " + table.values[n].to_string());
        if (n >= 2) {
            CycloNumber s = CycloNumber::zero(table.values[0].field());
            for (unsigned k = 0; k < n; ++k) {
                s += table.values[k] * Rational(binomial(n, k));
            }
            o.record(s.is_zero(), "recurrence fails at n = " + std::to_string(n));
        }
    }
    o.record(oracle[12] == make_rational(-691, 2730), "B_12 oracle");
    return o;
}

Outcome criterion2()
{
    Outcome o;
    const DirichletCharacter chi = enumerate_characters(4).at(1);
    const long d = 4;
    const TwistContext ctx(chi, 1, 0);
    const auto table = bernoulli_numbers(ctx, 6);
    o.record(table.values[1] == CycloNumber(ctx.field(), make_rational(-1, 2)), "B_{1,chi} != -1/2");
    const auto b = recurrence_bernoulli(6);
    for (unsigned n = 0; n <= 6; ++n) {
        Rational oracle(0);
        for (long a = 0; a < d; ++a) {
            const auto value = chi.evaluate(a).as_rational();
            if (!value || *value == 0) {
                continue;
            }
            const Rational x = make_rational(a, d);
            Rational bn_x(0);
            for (unsigned k = 0; k <= n; ++k) {
                bn_x += Rational(binomial(n, k)) * b[k] * power(x, static_cast<long>(n - k));
            }
            oracle += *value * bn_x;
        }
        oracle *= power(Rational(d), static_cast<long>(n) - 1);
        o.record(table.values[n] == CycloNumber(ctx.field(), oracle),
                 "B_" + std::to_string(n) + ",chi = " + table.values[n].to_string() + ", oracle " + to_string(oracle));
    }
    return o;
}

Outcome criterion3()
{
    Outcome o;
    for (const auto& ctx : grid_contexts(kModuli, false)) {
        for (long w : {1, 2, 3}) {
            const auto r = powersum_gf_check(ctx, w, 10);
            o.record(r.pass, ctx.describe() + " w=" + std::to_string(w) + ": " + r.detail);
        }
    }
    return o;
}

const std::vector<Weights> kTriples{{1, 2, 3}, {2, 3, 5}};

Outcome criterion4()
{
    Outcome o;
    for (const auto& ctx : grid_contexts(kModuli, false)) {
        for (const Weights& w : kTriples) {
            for (const auto& [family, i] : quotient_types()) {
                const auto base = quotient_series(QuotientSpec{family, i, w, ctx}, 6);
                for (const Weights& perm : permutations(w)) {
                    const bool same = quotient_series(QuotientSpec{family, i, perm, ctx}, 6) == base;
                    o.record(same, where(ctx, perm, to_string(family) + "^" + std::to_string(i)));
                }
            }
        }
    }
    return o;
}

Outcome criterion5()
{
    Outcome o;
    for (const auto& ctx : grid_contexts(kModuli, false)) {
        for (const Weights& w : kTriples) {
            for (const auto& [family, i] : quotient_types()) {
                const QuotientSpec spec{family, i, w, ctx};
                const auto series = quotient_series(spec, 5);
                Evaluator evaluator = make_form_evaluator(spec);
                for (Form form : forms_for(spec)) {
                    for (unsigned n = 0; n <= 5; ++n) {
                        const auto diff = describe_difference(expansion_coefficient(form, n, spec, evaluator),
                                                              series.egf(n));
                        o.record(!diff, where(ctx, w, to_string(form) + " n=" + std::to_string(n)) + ": " +
                                            diff.value_or(""));
                    }
                }
            }
        }
    }
    return o;
}

const std::vector<Weights> kTheoremTriples{{1, 1, 1}, {1, 2, 3}, {2, 3, 5}};

Outcome criterion6()
{
    Outcome o;
    for (const auto& ctx : grid_contexts(kModuli, true)) {
        for (const Weights& w : kTheoremTriples) {
            Evaluator evaluator(ctx, w);
            for (int id = 1; id <= 8; ++id) {
                for (unsigned n = 0; n <= 6; ++n) {
                    const auto r = verify_theorem(id, evaluator, n);
                    o.record(r.pass, where(ctx, w, "theorem " + std::to_string(id) + " n=" + std::to_string(n)) +
                                         ": " + r.detail);
                }
            }
        }
    }
    return o;
}

Outcome criterion7()
{
    Outcome o;
    for (const auto& ctx : grid_contexts(kModuli, true)) {
        for (const Weights& w : kTheoremTriples) {
            Evaluator evaluator(ctx, w);
            for (ReductionGroup g : {ReductionGroup::BernoulliPowerSum, ReductionGroup::PowerSumOnly}) {
                for (unsigned n = 0; n <= 4; ++n) {
                    const auto r = permutation_reduction_check(g, evaluator, n);
                    o.record(r.pass, where(ctx, w, to_string(g) + " n=" + std::to_string(n)) + ": " + r.detail);
                }
            }
        }
    }
    return o;
}

Outcome criterion8()
{
    Outcome o;
    for (const auto& ctx : grid_contexts({1, 4}, false)) {
        for (const Weights& w : kTriples) {
            for (int i = 0; i <= 3; ++i) {
                const auto r = lambda13_substitution_check(QuotientSpec{Family::L13, i, w, ctx}, 5);
                o.record(r.pass, where(ctx, w, "i=" + std::to_string(i)) + ": " + r.detail);
            }
        }
    }
    return o;
}

Outcome criterion9()
{
    Outcome o;
    for (const auto& [p, s] : std::vector<std::pair<unsigned long, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
        for (long d : {1L, static_cast<long>(p)}) {
            for (const auto& chi : enumerate_characters(d)) {
                if (!chi.is_real()) {
                    continue;
                }
                const auto ctx = TwistContext::ramified(chi, p, s);
                for (unsigned k = 0; k <= 4; ++k) {
                    const auto r = convergence_check(ctx, k, 5);
                    o.record(r.pass, ctx.describe() + " k=" + std::to_string(k) + ": " + r.detail);
                }
            }
        }
    }
    const auto plain = convergence_check(TwistContext::ramified(principal_character(1), 3, 0), 1, 5);
    bool expected = plain.valuations.size() == 5;
    for (std::size_t i = 0; expected && i < 5; ++i) {
        expected = plain.valuations[i] == Valuation::of(Rational(static_cast<long>(i + 1)));
    }
    o.record(expected, "p=3, d=1, k=1 does not give valuations 1..5");
    return o;
}

Outcome criterion10()
{
    Outcome o;
    for (unsigned m = 0; m <= 8; ++m) {
        for (unsigned n = 1; n <= 6; ++n) {
            const auto r = shift_identity_check(m, n);
            o.record(r.pass, r.detail);
        }
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "classical Bernoulli numbers, n <= 12", 1, criterion1},
        {2, "generalized Bernoulli numbers mod 4, n <= 6", 1, criterion2},
        {3, "power-sum generating function, K = 10", 30, criterion3},
        {4, "S3 invariance of the quotient series, N = 6", 120, criterion4},
        {5, "expansion forms vs quotient series, n <= 5", 300, criterion5},
        {6, "theorems 1-8, primitive characters, n <= 6", 600, criterion6},
        {7, "permutation reductions, n <= 4", 120, criterion7},
        {8, "Lambda_13 substitution, N = 5", 60, criterion8},
        {9, "p-adic convergence, N = 1..5", 60, criterion9},
        {10, "shift identity, m <= 8, n <= 6", 1, criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.limit_seconds;
        const bool pass = outcome.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("criterion %2d: %s  %-46s %6zu checks  %8.3f s (limit %g s)", c.id, pass ? "PASS" : "FAIL",
                    c.name, outcome.checks, seconds, c.limit_seconds);
        if (!outcome.pass) {
            std::printf("  %zu failing, first: %s", outcome.failures, outcome.detail.c_str());
        } else if (!in_time) {
            std::printf("  over the time limit");
        }
        std::printf("\n");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
