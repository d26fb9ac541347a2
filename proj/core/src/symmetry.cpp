#include "tbern/symmetry.hpp"

#include "tbern/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tbern {

namespace {

long product(const Weights& w) { return w[0] * w[1] * w[2]; }

Weights pair_products(const Weights& w) { return {w[1] * w[2], w[0] * w[2], w[0] * w[1]}; }

// prefactor * t^tpow * e^{yscale (sum vars) t} * prod numer F_c / prod denom F_c * prod sums,
// with F_c = xi^{dc} e^{dct} - 1 and sums sum_{a<d} chi(a) xi^{ac} e^{act}.
struct ClosedForm {
    Rational prefactor;
    long tpow;
    std::vector<long> numer;
    std::vector<long> denom;
    std::vector<long> sums;
    Rational yscale;
    std::vector<Var> vars;
};

ClosedForm closed_form(const QuotientSpec& spec)
{
    const Weights& w = spec.w;
    const long W = product(w);
    const Weights pairs = pair_products(w);
    const std::vector<long> singles(w.begin(), w.end());
    const std::vector<long> doubles(pairs.begin(), pairs.end());
    ClosedForm f;
    f.vars = quotient_variables(spec);
    switch (spec.family) {
    case Family::L23:
    case Family::L13: {
        const bool l23 = spec.family == Family::L23;
        f.prefactor = power(Rational(W), (l23 ? 2 : 1) - spec.i);
        f.tpow = 3 - spec.i;
        f.numer.assign(static_cast<std::size_t>(spec.i), W);
        f.denom = l23 ? doubles : singles;
        f.sums = f.denom;
        f.yscale = W;
        break;
    }
    case Family::L12:
        if (spec.i == 0) {
            f.prefactor = W;
            f.tpow = 3;
            f.denom = singles;
            f.sums = singles;
            f.yscale = pairs[0] + pairs[1] + pairs[2];
        } else {
            f.prefactor = make_rational(1, W);
            f.tpow = 0;
            f.numer = doubles;
            f.denom = singles;
            f.sums = singles;
            f.yscale = 0;
        }
        break;
    }
    return f;
}

// F_c / t^v to order N, v = 1 when xi^{dc} = 1 and 0 otherwise.
std::pair<PowerSeries<CycloNumber>, long> reduced_factor(const TwistContext& ctx, long c, std::size_t N)
{
    const long d = ctx.d();
    auto e = exp_scaled(ctx.field(), Rational(d * c), N + 1);
    e *= ctx.xi_power(d * c);
    e -= PowerSeries<CycloNumber>::constant(ctx.one(), N + 1);
    if (ctx.xi_power_is_one(d * c)) {
        return {divide_by_t(e, 1), 1};
    }
    return {e.truncated(N), 0};
}

std::uint32_t ambient_order_for(std::uint32_t r, long value_order)
{
    const long m = value_order <= 2 ? 1 : value_order;
    return static_cast<std::uint32_t>(std::lcm(static_cast<long>(r), m));
}

// xi' = zeta_{r'}^j of least order with xi'^W = xi, xi = zeta_r^e.
std::pair<long, long> root_of_power(long r, long e, long W)
{
    for (long f = 1; f <= W; ++f) {
        if (W % f != 0) {
            continue;
        }
        const long rp = r * f;
        for (long j = 0; j < rp; ++j) {
            const long long lhs = static_cast<long long>(j) * W * r;
            const long long rhs = static_cast<long long>(e) * rp;
            if ((lhs - rhs) % (static_cast<long long>(r) * rp) == 0) {
                return {rp, j};
            }
        }
    }
    throw std::logic_error("no W-th root found");
}

std::string difference_detail(const std::string& left, const std::string& right, const std::string& diff)
{
    return left + " != " + right + ": " + diff;
}

} // namespace

std::string to_string(Family family)
{
    switch (family) {
    case Family::L23: return "L23";
    case Family::L13: return "L13";
    case Family::L12: return "L12";
    }
    return "?";
}

Family parse_family(const std::string& name)
{
    if (name == "L23") {
        return Family::L23;
    }
    if (name == "L13") {
        return Family::L13;
    }
    if (name == "L12") {
        return Family::L12;
    }
    throw ParameterError("unknown family: " + name);
}

void validate(const QuotientSpec& spec)
{
    for (long wi : spec.w) {
        if (wi < 1) {
            throw ParameterError("w components must be positive");
        }
    }
    const int max_i = spec.family == Family::L12 ? 1 : 3;
    if (spec.i < 0 || spec.i > max_i) {
        throw ParameterError("invalid (family, i) combination: " + to_string(spec.family) + " i=" +
                             std::to_string(spec.i));
    }
}

std::vector<Var> quotient_variables(const QuotientSpec& spec)
{
    validate(spec);
    if (spec.family == Family::L12) {
        return spec.i == 0 ? std::vector<Var>{Var::y} : std::vector<Var>{};
    }
    const std::vector<Var> all{Var::y1, Var::y2, Var::y3};
    return std::vector<Var>(all.begin(), all.begin() + (3 - spec.i));
}

PowerSeries<SymPoly> quotient_series(const QuotientSpec& spec, std::size_t N)
{
    validate(spec);
    const TwistContext& ctx = spec.context;
    const ClosedForm f = closed_form(spec);

    auto acc = PowerSeries<CycloNumber>::constant(CycloNumber(ctx.field(), f.prefactor), N);
    long tpow = f.tpow;
    for (long c : f.numer) {
        auto [s, v] = reduced_factor(ctx, c, N);
        acc *= s;
        tpow += v;
    }
    for (long c : f.denom) {
        auto [s, v] = reduced_factor(ctx, c, N);
        acc *= series_invert(s);
        tpow -= v;
    }
    for (long c : f.sums) {
        acc *= character_exp_sum(ctx, c, ctx.d(), N);
    }
    if (tpow < 0) {
        throw std::logic_error("closed form has a pole at t = 0");
    }
    acc = multiply_by_t(acc, static_cast<std::size_t>(tpow)).truncated(N);

    auto lifted = lift(acc);
    if (f.vars.empty()) {
        return lifted;
    }
    SymPoly y(ctx.field());
    for (Var v : f.vars) {
        y += SymPoly::linear(v, f.yscale, 0, ctx.field());
    }
    return lifted * exp_scaled(y, N);
}

std::vector<Form> forms_for(const QuotientSpec& spec)
{
    validate(spec);
    if (spec.family == Family::L12) {
        return {spec.i == 0 ? Form::a29 : Form::a30};
    }
    switch (spec.i) {
    case 0: return {Form::a19};
    case 1: return {Form::a21, Form::a22};
    case 2: return {Form::a24, Form::a26, Form::a27};
    default: return {Form::a28};
    }
}

Evaluator make_form_evaluator(const QuotientSpec& spec)
{
    validate(spec);
    if (spec.family == Family::L13) {
        return Evaluator(spec.context, pair_products(spec.w), product(spec.w));
    }
    return Evaluator(spec.context, spec.w, 1);
}

SymPoly expansion_coefficient(Form form, unsigned n, const QuotientSpec& spec, Evaluator& evaluator)
{
    const auto forms = forms_for(spec);
    if (std::find(forms.begin(), forms.end(), form) == forms.end()) {
        throw ParameterError("form " + to_string(form) + " does not expand " + to_string(spec.family) +
                             " i=" + std::to_string(spec.i));
    }
    SymPoly value = evaluator.evaluate(form_expression(form), n);
    if (spec.family == Family::L13) {
        value *= power(Rational(product(spec.w)), -static_cast<long>(n));
    }
    return value;
}

SymPoly expansion_coefficient(Form form, unsigned n, const QuotientSpec& spec)
{
    Evaluator evaluator = make_form_evaluator(spec);
    return expansion_coefficient(form, n, spec, evaluator);
}

CheckReport lambda13_substitution_check(const QuotientSpec& spec, std::size_t N)
{
    validate(spec);
    if (spec.family != Family::L13) {
        throw ParameterError("substitution check needs an L13 spec");
    }
    const TwistContext& ctx = spec.context;
    const long W = product(spec.w);
    const long L = ctx.field()->order();
    const long r = ctx.xi_order();
    const long e = ctx.xi_index() / (L / r);
    const auto [rp, j] = root_of_power(r, e, W);
    const std::uint32_t Lp = ambient_order_for(static_cast<std::uint32_t>(rp), ctx.character().value_order());
    const TwistContext root_ctx(ctx.character(), CycloField::of(Lp), j * (static_cast<long>(Lp) / rp));

    const auto lhs = quotient_series(QuotientSpec{Family::L23, spec.i, pair_products(spec.w), root_ctx}, N);
    const auto rhs = rescale_t(quotient_series(spec, N), Rational(W));
    const FieldPtr joined = join_fields(root_ctx.field(), ctx.field());

    CheckReport report;
    for (std::size_t k = 0; k <= N; ++k) {
        const SymPoly a = lhs[k].embed(joined);
        const SymPoly b = rhs[k].embed(joined);
        if (auto diff = describe_difference(a, b)) {
            report.pass = false;
            report.detail = "coefficient t^" + std::to_string(k) + ": " + *diff;
            return report;
        }
    }
    std::ostringstream out;
    out << "agree up to t^" << N << " with xi' of order " << rp;
    report.detail = out.str();
    return report;
}

std::optional<std::string> describe_difference(const SymPoly& a, const SymPoly& b)
{
    auto diff = first_difference(a, b);
    if (!diff) {
        return std::nullopt;
    }
    std::ostringstream out;
    out << "coefficient of " << to_string(diff->monomial) << ": "
        << (diff->lhs ? diff->lhs->to_string() : std::string("0")) << " vs "
        << (diff->rhs ? diff->rhs->to_string() : std::string("0"));
    return out.str();
}

TheoremReport verify_theorem(int id, Evaluator& evaluator, unsigned n)
{
    const auto& exprs = theorem_expressions(id);
    TheoremReport report;
    report.theorem = id;
    report.context = evaluator.context().describe();
    report.w = evaluator.weights();
    report.n = n;
    for (const Expr& e : exprs) {
        report.labels.push_back(e.label);
        report.expressions.push_back(evaluator.evaluate(e, n));
    }
    for (std::size_t i = 1; i < report.expressions.size() && report.pass; ++i) {
        if (auto diff = describe_difference(report.expressions[0], report.expressions[i])) {
            report.pass = false;
            report.detail = difference_detail(report.labels[0], report.labels[i], *diff);
        }
    }
    if (id == 3) {
        report.printed_form_holds = evaluator.evaluate(theorem3_printed_fifth(), n) == report.expressions[0];
    }
    if (report.pass) {
        report.detail = std::to_string(exprs.size()) + " expressions agree";
    }
    return report;
}

TheoremReport verify_theorem(int id, const TwistContext& context, const Weights& w, unsigned n)
{
    Evaluator evaluator(context, w, 1);
    return verify_theorem(id, evaluator, n);
}

std::string to_string(ReductionGroup group)
{
    return group == ReductionGroup::BernoulliPowerSum ? "bernoulli" : "powersum";
}

CheckReport permutation_reduction_check(ReductionGroup group, Evaluator& evaluator, unsigned n)
{
    const auto& pairs =
        group == ReductionGroup::BernoulliPowerSum ? bernoulli_reductions() : powersum_reductions();
    CheckReport report;
    for (const auto& pair : pairs) {
        const SymPoly a = evaluator.evaluate(pair.expression, n);
        const SymPoly b = evaluator.evaluate(pair.partner, n);
        if (auto diff = describe_difference(a, b)) {
            report.pass = false;
            report.detail = difference_detail(pair.expression.label, pair.partner.label, *diff);
            return report;
        }
    }
    report.detail = std::to_string(pairs.size()) + " reductions agree";
    return report;
}

CheckReport permutation_reduction_check(ReductionGroup group, const TwistContext& context, const Weights& w,
                                        unsigned n)
{
    Evaluator evaluator(context, w, 1);
    return permutation_reduction_check(group, evaluator, n);
}

std::vector<Weights> permutations(const Weights& w)
{
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::vector<Weights> out;
    do {
        out.push_back({w[idx[0]], w[idx[1]], w[idx[2]]});
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

} // namespace tbern
