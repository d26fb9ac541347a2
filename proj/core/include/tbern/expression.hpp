#pragma once

#include "tbern/special_functions.hpp"
#include "tbern/sympoly.hpp"

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace tbern {

// Integer affine form n*N + k*K + l*L + m*M + c in the summation indices.
struct Lin {
    int n = 0;
    int k = 0;
    int l = 0;
    int m = 0;
    int c = 0;

    long eval(long N, long K, long L, long M) const { return n * N + k * K + l * L + m * M + c; }
};

// Exponents of (w1, w2, w3).
using WeightMonomial = std::array<Lin, 3>;

// (w_num / w_den) * index, index 0 for a and 1 for b.
struct Shift {
    int num;
    int den;
    int index = 0;
};

// A factor indexed by one summation variable q:
//   Bernoulli: B_{q, chi, xi^{prod twist}}(w_weight * var + sum of shifts)
//   PowerSum:  S_q(d w_weight - 1; chi, xi^{prod twist})
// Weights are referenced by position 0, 1, 2.
struct Slot {
    enum class Kind { Bernoulli, PowerSum };
    Kind kind;
    std::vector<int> twist;
    int weight;
    Var var = Var::y;
    std::vector<Shift> shifts;
};

// sum_{a=0}^{d w_range - 1} chi(a) xi^{a * prod twist}
struct CharacterSum {
    int range;
    std::vector<int> twist;
};

// Three summation shapes cover every displayed expression:
//   Triple:   sum_{k+l+m=n} C(n;k,l,m) w^mono slot0(k) slot1(l) slot2(m)
//   Binomial: w^prefactor sum_k C(n,k) w^mono sum_a [a] slot0(k) slot1(n-k)
//   Double:   w^prefactor sum_a sum_b [a][b] slot0(n)
struct Expr {
    enum class Shape { Triple, Binomial, Double };
    std::string label;
    Shape shape;
    WeightMonomial prefactor{};
    WeightMonomial mono{};
    std::vector<Slot> slots;
    std::vector<CharacterSum> sums;
};

// Evaluates expressions for fixed (chi, xi, w). Twist exponents are products
// of weights divided by `divisor`, which lets the Lambda_13 forms reuse the
// Lambda_23 tables with substituted weights. Caches Bernoulli tables and power
// sums per twist; not thread-safe, use one evaluator per thread.
class Evaluator {
public:
    Evaluator(TwistContext context, std::array<long, 3> w, long divisor = 1);

    const TwistContext& context() const noexcept { return context_; }
    const std::array<long, 3>& weights() const noexcept { return w_; }

    SymPoly evaluate(const Expr& expr, unsigned n);

    // B_{q, chi, xi^tau}(x) for rational x.
    const CycloNumber& bernoulli_value(long tau, unsigned q, const Rational& x);
    // S_q(upper; chi, xi^tau)
    const CycloNumber& power_sum_value(long tau, long upper, unsigned q);

private:
    long twist_exponent(const std::vector<int>& twist) const;
    const BernoulliTable& table(long tau, unsigned n);
    Rational weight_power(const WeightMonomial& mono, long n, long k, long l, long m) const;
    SymPoly slot_value(const Slot& slot, unsigned q, long a, long b);
    CycloNumber sum_weight(const CharacterSum& sum, long a) const;

    TwistContext context_;
    std::array<long, 3> w_;
    long divisor_;
    std::map<long, BernoulliTable> tables_;
    std::map<std::tuple<long, unsigned, Rational>, CycloNumber> values_;
    std::map<std::tuple<long, long, unsigned>, CycloNumber> sums_;
};

// Expansion forms of the quotient types.
enum class Form { a19, a21, a22, a24, a26, a27, a28, a29, a30 };

std::string to_string(Form form);
Form parse_form(const std::string& name);
const std::vector<Form>& all_forms();
const Expr& form_expression(Form form);

// Displayed expressions of theorem 1..8, in order of appearance.
const std::vector<Expr>& theorem_expressions(int id);

// Fifth expression of theorem 3 exactly as printed, shift (w1/w2)a.
const Expr& theorem3_printed_fifth();

// Direct transcriptions of the reduction expressions r31..r37 and their
// stated partners.
struct ReductionPair {
    Expr expression;
    Expr partner;
};
const std::vector<ReductionPair>& bernoulli_reductions();
const std::vector<ReductionPair>& powersum_reductions();

} // namespace tbern
