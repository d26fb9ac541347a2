#include "tbern/expression.hpp"

#include "tbern/errors.hpp"

#include <stdexcept>

namespace tbern {

namespace {

constexpr Lin N{1, 0, 0, 0, 0};
constexpr Lin K{0, 1, 0, 0, 0};
constexpr Lin L{0, 0, 1, 0, 0};
constexpr Lin M{0, 0, 0, 1, 0};
constexpr Lin Z{};

constexpr Lin operator+(Lin a, Lin b) { return {a.n + b.n, a.k + b.k, a.l + b.l, a.m + b.m, a.c + b.c}; }
constexpr Lin operator-(Lin a, Lin b) { return {a.n - b.n, a.k - b.k, a.l - b.l, a.m - b.m, a.c - b.c}; }
constexpr Lin operator-(Lin a, int c) { return {a.n, a.k, a.l, a.m, a.c - c}; }

WeightMonomial mono(Lin e1, Lin e2, Lin e3) { return {e1, e2, e3}; }

Slot B(std::vector<int> twist, int weight, Var var, std::vector<Shift> shifts = {})
{
    return Slot{Slot::Kind::Bernoulli, std::move(twist), weight, var, std::move(shifts)};
}

Slot S(int range, std::vector<int> twist)
{
    return Slot{Slot::Kind::PowerSum, std::move(twist), range, Var::y, {}};
}

Shift sh(int num, int den, int index = 0) { return Shift{num, den, index}; }

Expr triple(std::string label, Slot s0, Slot s1, Slot s2, WeightMonomial m)
{
    Expr e;
    e.label = std::move(label);
    e.shape = Expr::Shape::Triple;
    e.mono = m;
    e.slots = {std::move(s0), std::move(s1), std::move(s2)};
    return e;
}

Expr binomial(std::string label, WeightMonomial pref, CharacterSum sum, Slot a, Slot b, WeightMonomial m)
{
    Expr e;
    e.label = std::move(label);
    e.shape = Expr::Shape::Binomial;
    e.prefactor = pref;
    e.mono = m;
    e.slots = {std::move(a), std::move(b)};
    e.sums = {std::move(sum)};
    return e;
}

Expr double_sum(std::string label, WeightMonomial pref, CharacterSum a, CharacterSum b, Slot slot)
{
    Expr e;
    e.label = std::move(label);
    e.shape = Expr::Shape::Double;
    e.prefactor = pref;
    e.slots = {std::move(slot)};
    e.sums = {std::move(a), std::move(b)};
    return e;
}

const Var y = Var::y;
const Var y1 = Var::y1;
const Var y2 = Var::y2;
const Var y3 = Var::y3;

long mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

Evaluator::Evaluator(TwistContext context, std::array<long, 3> w, long divisor)
    : context_(std::move(context)), w_(w), divisor_(divisor)
{
    for (long wi : w_) {
        if (wi < 1) {
            throw ParameterError("weights must be positive");
        }
    }
    if (divisor_ < 1) {
        throw ParameterError("divisor must be positive");
    }
}

long Evaluator::twist_exponent(const std::vector<int>& twist) const
{
    long tau = 1;
    for (int i : twist) {
        tau *= w_.at(static_cast<std::size_t>(i));
    }
    if (tau % divisor_ != 0) {
        throw std::logic_error("twist exponent not divisible by the divisor");
    }
    return tau / divisor_;
}

const BernoulliTable& Evaluator::table(long tau, unsigned n)
{
    const long L = context_.field()->order();
    tau = mod(tau, L);
    auto it = tables_.find(tau);
    if (it == tables_.end() || it->second.values.size() <= n) {
        auto built = bernoulli_numbers(context_.twisted(tau), std::max<std::size_t>(n, 8));
        it = tables_.insert_or_assign(tau, std::move(built)).first;
    }
    return it->second;
}

const CycloNumber& Evaluator::bernoulli_value(long tau, unsigned q, const Rational& x)
{
    const long L = context_.field()->order();
    auto key = std::make_tuple(mod(tau, L), q, x);
    auto it = values_.find(key);
    if (it != values_.end()) {
        return it->second;
    }
    const BernoulliTable& t = table(tau, q);
    return values_.emplace(std::move(key), bernoulli_polynomial_binomial(t, q, x)).first->second;
}

const CycloNumber& Evaluator::power_sum_value(long tau, long upper, unsigned q)
{
    const long L = context_.field()->order();
    auto key = std::make_tuple(mod(tau, L), upper, q);
    auto it = sums_.find(key);
    if (it != sums_.end()) {
        return it->second;
    }
    return sums_.emplace(key, power_sum(context_.twisted(std::get<0>(key)), q, upper)).first->second;
}

Rational Evaluator::weight_power(const WeightMonomial& m, long n, long k, long l, long mm) const
{
    Rational out(1);
    for (std::size_t i = 0; i < 3; ++i) {
        out *= power(Rational(w_[i]), m[i].eval(n, k, l, mm));
    }
    return out;
}

// B_q(alpha v + r) = sum_j C(q,j) B_{q-j}(r) alpha^j v^j
SymPoly Evaluator::slot_value(const Slot& slot, unsigned q, long a, long b)
{
    const long tau = twist_exponent(slot.twist);
    const long d = context_.d();
    if (slot.kind == Slot::Kind::PowerSum) {
        return SymPoly(power_sum_value(tau, d * w_.at(static_cast<std::size_t>(slot.weight)) - 1, q));
    }
    const Rational alpha(w_.at(static_cast<std::size_t>(slot.weight)));
    Rational r(0);
    for (const Shift& s : slot.shifts) {
        const long idx = s.index == 0 ? a : b;
        r += make_rational(w_.at(static_cast<std::size_t>(s.num)), w_.at(static_cast<std::size_t>(s.den))) * idx;
    }
    SymPoly out(context_.field());
    Rational alpha_j(1);
    for (unsigned j = 0; j <= q; ++j) {
        Monomial mono{};
        mono[static_cast<std::size_t>(slot.var)] = static_cast<std::uint8_t>(j);
        const CycloNumber c = bernoulli_value(tau, q - j, r) * (Rational(binomial(q, j)) * alpha_j);
        out += SymPoly::monomial(mono, c);
        alpha_j *= alpha;
    }
    return out;
}

CycloNumber Evaluator::sum_weight(const CharacterSum& sum, long a) const
{
    return context_.chi_xi(a, twist_exponent(sum.twist));
}

SymPoly Evaluator::evaluate(const Expr& e, unsigned n)
{
    const FieldPtr& field = context_.field();
    const long d = context_.d();
    SymPoly out(field);
    switch (e.shape) {
    case Expr::Shape::Triple: {
        std::array<std::vector<SymPoly>, 3> cache;
        for (std::size_t s = 0; s < 3; ++s) {
            for (unsigned q = 0; q <= n; ++q) {
                cache[s].push_back(slot_value(e.slots[s], q, 0, 0));
            }
        }
        for (unsigned k = 0; k <= n; ++k) {
            for (unsigned l = 0; k + l <= n; ++l) {
                const unsigned m = n - k - l;
                const Rational coeff = Rational(multinomial(k, l, m)) * weight_power(e.mono, n, k, l, m);
                out += cache[0][k] * cache[1][l] * cache[2][m] * coeff;
            }
        }
        return out;
    }
    case Expr::Shape::Binomial: {
        const CharacterSum& sum = e.sums.at(0);
        const long upper = d * w_.at(static_cast<std::size_t>(sum.range));
        for (long a = 0; a < upper; ++a) {
            const CycloNumber wa = sum_weight(sum, a);
            if (wa.is_zero()) {
                continue;
            }
            SymPoly inner(field);
            for (unsigned k = 0; k <= n; ++k) {
                const Rational coeff = Rational(binomial(n, k)) * weight_power(e.mono, n, k, 0, 0);
                inner += slot_value(e.slots[0], k, a, 0) * slot_value(e.slots[1], n - k, a, 0) * coeff;
            }
            out.add_scaled(inner, wa);
        }
        return out * weight_power(e.prefactor, n, 0, 0, 0);
    }
    case Expr::Shape::Double: {
        const CharacterSum& sa = e.sums.at(0);
        const CharacterSum& sb = e.sums.at(1);
        const long ua = d * w_.at(static_cast<std::size_t>(sa.range));
        const long ub = d * w_.at(static_cast<std::size_t>(sb.range));
        for (long a = 0; a < ua; ++a) {
            const CycloNumber wa = sum_weight(sa, a);
            if (wa.is_zero()) {
                continue;
            }
            for (long b = 0; b < ub; ++b) {
                const CycloNumber wb = sum_weight(sb, b);
                if (wb.is_zero()) {
                    continue;
                }
                out.add_scaled(slot_value(e.slots[0], n, a, b), wa * wb);
            }
        }
        return out * weight_power(e.prefactor, n, 0, 0, 0);
    }
    }
    throw std::logic_error("unknown expression shape");
}

std::string to_string(Form form)
{
    switch (form) {
    case Form::a19: return "a19";
    case Form::a21: return "a21";
    case Form::a22: return "a22";
    case Form::a24: return "a24";
    case Form::a26: return "a26";
    case Form::a27: return "a27";
    case Form::a28: return "a28";
    case Form::a29: return "a29";
    case Form::a30: return "a30";
    }
    return "?";
}

const std::vector<Form>& all_forms()
{
    static const std::vector<Form> forms{Form::a19, Form::a21, Form::a22, Form::a24, Form::a26,
                                         Form::a27, Form::a28, Form::a29, Form::a30};
    return forms;
}

Form parse_form(const std::string& name)
{
    for (Form f : all_forms()) {
        if (to_string(f) == name) {
            return f;
        }
    }
    throw ParameterError("unknown form: " + name);
}

const Expr& form_expression(Form form)
{
    static const std::map<Form, Expr> table{
        {Form::a19, triple("a19", B({1, 2}, 0, y1), B({0, 2}, 1, y2), B({0, 1}, 2, y3), mono(L + M, K + M, K + L))},
        {Form::a21, triple("a21", B({1, 2}, 0, y1), B({0, 2}, 1, y2), S(2, {0, 1}), mono(L + M, K + M, K + L - 1))},
        {Form::a22, binomial("a22", mono(Z, Z, N - 1), {2, {0, 1}}, B({1, 2}, 0, y1),
                             B({0, 2}, 1, y2, {sh(1, 2)}), mono(N - K, K, Z))},
        {Form::a24, triple("a24", B({1, 2}, 0, y1), S(1, {0, 2}), S(2, {0, 1}), mono(L + M, K + M - 1, K + L - 1))},
        {Form::a26, binomial("a26", mono(Z, N - 1, Z), {1, {0, 2}}, B({1, 2}, 0, y1, {sh(0, 1)}), S(2, {0, 1}),
                             mono(N - K, Z, K - 1))},
        {Form::a27, double_sum("a27", mono(Z, N - 1, N - 1), {1, {0, 2}}, {2, {0, 1}},
                               B({1, 2}, 0, y1, {sh(0, 1, 0), sh(0, 2, 1)}))},
        {Form::a28, triple("a28", S(0, {1, 2}), S(1, {0, 2}), S(2, {0, 1}), mono(L + M - 1, K + M - 1, K + L - 1))},
        {Form::a29, triple("a29", B({0}, 1, y), B({1}, 2, y), B({2}, 0, y), mono(K, L, M))},
        {Form::a30, triple("a30", S(1, {0}), S(2, {1}), S(0, {2}), mono(K - 1, L - 1, M - 1))},
    };
    return table.at(form);
}

const std::vector<Expr>& theorem_expressions(int id)
{
    static const std::map<int, std::vector<Expr>> table{
        {1,
         {
             triple("T1.1", B({1, 2}, 0, y1), B({0, 2}, 1, y2), B({0, 1}, 2, y3), mono(L + M, K + M, K + L)),
             triple("T1.2", B({1, 2}, 0, y1), B({0, 1}, 2, y2), B({0, 2}, 1, y3), mono(L + M, K + L, K + M)),
             triple("T1.3", B({0, 2}, 1, y1), B({1, 2}, 0, y2), B({0, 1}, 2, y3), mono(K + M, L + M, K + L)),
             triple("T1.4", B({0, 2}, 1, y1), B({0, 1}, 2, y2), B({1, 2}, 0, y3), mono(K + L, L + M, K + M)),
             triple("T1.5", B({0, 1}, 2, y1), B({1, 2}, 0, y2), B({0, 2}, 1, y3), mono(K + M, K + L, L + M)),
             triple("T1.6", B({0, 1}, 2, y1), B({0, 2}, 1, y2), B({1, 2}, 0, y3), mono(K + L, K + M, L + M)),
         }},
        {2,
         {
             triple("T2.1", B({1, 2}, 0, y1), B({0, 2}, 1, y2), S(2, {0, 1}), mono(L + M, K + M, K + L - 1)),
             triple("T2.2", B({1, 2}, 0, y1), B({0, 1}, 2, y2), S(1, {0, 2}), mono(L + M, K + L - 1, K + M)),
             triple("T2.3", B({0, 2}, 1, y1), B({1, 2}, 0, y2), S(2, {0, 1}), mono(K + M, L + M, K + L - 1)),
             triple("T2.4", B({0, 2}, 1, y1), B({0, 1}, 2, y2), S(0, {1, 2}), mono(K + L - 1, L + M, K + M)),
             triple("T2.5", B({0, 1}, 2, y1), B({0, 2}, 1, y2), S(0, {1, 2}), mono(K + L - 1, K + M, L + M)),
             triple("T2.6", B({0, 1}, 2, y1), B({1, 2}, 0, y2), S(1, {0, 2}), mono(K + M, K + L - 1, L + M)),
         }},
        {3,
         {
             binomial("T3.1", mono(N - 1, Z, Z), {0, {1, 2}}, B({0, 1}, 2, y1), B({0, 2}, 1, y2, {sh(1, 0)}),
                      mono(Z, K, N - K)),
             binomial("T3.2", mono(N - 1, Z, Z), {0, {1, 2}}, B({0, 2}, 1, y1), B({0, 1}, 2, y2, {sh(2, 0)}),
                      mono(Z, N - K, K)),
             binomial("T3.3", mono(Z, N - 1, Z), {1, {0, 2}}, B({0, 1}, 2, y1), B({1, 2}, 0, y2, {sh(0, 1)}),
                      mono(K, Z, N - K)),
             binomial("T3.4", mono(Z, N - 1, Z), {1, {0, 2}}, B({1, 2}, 0, y1), B({0, 1}, 2, y2, {sh(2, 1)}),
                      mono(N - K, Z, K)),
             binomial("T3.5", mono(Z, Z, N - 1), {2, {0, 1}}, B({0, 2}, 1, y1), B({1, 2}, 0, y2, {sh(0, 2)}),
                      mono(K, N - K, Z)),
             binomial("T3.6", mono(Z, Z, N - 1), {2, {0, 1}}, B({1, 2}, 0, y1), B({0, 2}, 1, y2, {sh(1, 2)}),
                      mono(N - K, K, Z)),
         }},
        {4,
         {
             triple("T4.1", B({1, 2}, 0, y1), S(1, {0, 2}), S(2, {0, 1}), mono(L + M, K + M - 1, K + L - 1)),
             triple("T4.2", B({0, 2}, 1, y1), S(2, {0, 1}), S(0, {1, 2}), mono(K + L - 1, L + M, K + M - 1)),
             triple("T4.3", B({0, 1}, 2, y1), S(0, {1, 2}), S(1, {0, 2}), mono(K + M - 1, K + L - 1, L + M)),
         }},
        {5,
         {
             binomial("T5.1", mono(N - 1, Z, Z), {0, {1, 2}}, B({0, 2}, 1, y1, {sh(1, 0)}), S(2, {0, 1}),
                      mono(Z, N - K, K - 1)),
             binomial("T5.2", mono(N - 1, Z, Z), {0, {1, 2}}, B({0, 1}, 2, y1, {sh(2, 0)}), S(1, {0, 2}),
                      mono(Z, K - 1, N - K)),
             binomial("T5.3", mono(Z, N - 1, Z), {1, {0, 2}}, B({1, 2}, 0, y1, {sh(0, 1)}), S(2, {0, 1}),
                      mono(N - K, Z, K - 1)),
             binomial("T5.4", mono(Z, N - 1, Z), {1, {0, 2}}, B({0, 1}, 2, y1, {sh(2, 1)}), S(0, {1, 2}),
                      mono(K - 1, Z, N - K)),
             binomial("T5.5", mono(Z, Z, N - 1), {2, {0, 1}}, B({1, 2}, 0, y1, {sh(0, 2)}), S(1, {0, 2}),
                      mono(N - K, K - 1, Z)),
             binomial("T5.6", mono(Z, Z, N - 1), {2, {0, 1}}, B({0, 2}, 1, y1, {sh(1, 2)}), S(0, {1, 2}),
                      mono(K - 1, N - K, Z)),
         }},
        {6,
         {
             double_sum("T6.1", mono(N - 1, N - 1, Z), {0, {1, 2}}, {1, {0, 2}},
                        B({0, 1}, 2, y1, {sh(2, 0, 0), sh(2, 1, 1)})),
             double_sum("T6.2", mono(Z, N - 1, N - 1), {1, {0, 2}}, {2, {0, 1}},
                        B({1, 2}, 0, y1, {sh(0, 1, 0), sh(0, 2, 1)})),
             double_sum("T6.3", mono(N - 1, Z, N - 1), {2, {0, 1}}, {0, {1, 2}},
                        B({0, 2}, 1, y1, {sh(1, 2, 0), sh(1, 0, 1)})),
         }},
        {7,
         {
             triple("T7.1", B({2}, 0, y), B({0}, 1, y), B({1}, 2, y), mono(L, M, K)),
             triple("T7.2", B({1}, 0, y), B({0}, 2, y), B({2}, 1, y), mono(L, K, M)),
         }},
        {8,
         {
             triple("T8.1", S(0, {2}), S(1, {0}), S(2, {1}), mono(L - 1, M - 1, K - 1)),
             triple("T8.2", S(0, {1}), S(2, {0}), S(1, {2}), mono(L - 1, K - 1, M - 1)),
         }},
    };
    auto it = table.find(id);
    if (it == table.end()) {
        throw ParameterError("theorem id must be in 1..8");
    }
    return it->second;
}

const Expr& theorem3_printed_fifth()
{
    static const Expr e = binomial("T3.5-printed", mono(Z, Z, N - 1), {2, {0, 1}}, B({0, 2}, 1, y1),
                                   B({1, 2}, 0, y2, {sh(0, 1)}), mono(K, N - K, Z));
    return e;
}

const std::vector<ReductionPair>& bernoulli_reductions()
{
    static const std::vector<ReductionPair> pairs{
        {triple("r31", B({1, 2}, 0, y1), S(2, {0, 1}), S(1, {0, 2}), mono(L + M, K + L - 1, K + M - 1)),
         theorem_expressions(4)[0]},
        {triple("r32", B({0, 2}, 1, y1), S(0, {1, 2}), S(2, {0, 1}), mono(K + M - 1, L + M, K + L - 1)),
         theorem_expressions(4)[1]},
        {triple("r33", B({0, 1}, 2, y1), S(1, {0, 2}), S(0, {1, 2}), mono(K + L - 1, K + M - 1, L + M)),
         theorem_expressions(4)[2]},
    };
    return pairs;
}

const std::vector<ReductionPair>& powersum_reductions()
{
    static const std::vector<ReductionPair> pairs{
        {triple("r34", S(1, {0}), S(2, {1}), S(0, {2}), mono(K - 1, L - 1, M - 1)), theorem_expressions(8)[0]},
        {triple("r35", S(2, {1}), S(0, {2}), S(1, {0}), mono(M - 1, K - 1, L - 1)), theorem_expressions(8)[0]},
        {triple("r36", S(2, {0}), S(1, {2}), S(0, {1}), mono(K - 1, M - 1, L - 1)), theorem_expressions(8)[1]},
        {triple("r37", S(1, {2}), S(0, {1}), S(2, {0}), mono(M - 1, L - 1, K - 1)), theorem_expressions(8)[1]},
    };
    return pairs;
}

} // namespace tbern
