#pragma once

#include "tbern/expression.hpp"
#include "tbern/series.hpp"
#include "tbern/special_functions.hpp"
#include "tbern/sympoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tbern {

enum class Family { L23, L13, L12 };

std::string to_string(Family family);
Family parse_family(const std::string& name);

using Weights = std::array<long, 3>;

struct QuotientSpec {
    Family family;
    int i;
    Weights w;
    TwistContext context;
};

// Throws ParameterError on a bad (family, i) pair or a non-positive weight.
void validate(const QuotientSpec& spec);

// Live y-variables of the quotient type.
std::vector<Var> quotient_variables(const QuotientSpec& spec);

// The closed-form product of the quotient type, to order N, as a series in t
// with SymPoly coefficients in the y-variables.
PowerSeries<SymPoly> quotient_series(const QuotientSpec& spec, std::size_t truncation);

// Expansion forms applicable to a quotient spec, in the order they are listed.
std::vector<Form> forms_for(const QuotientSpec& spec);

// n-th EGF coefficient through the finite sums of the given form.
SymPoly expansion_coefficient(Form form, unsigned n, const QuotientSpec& spec);
// Same, reusing an evaluator built by make_form_evaluator(spec).
SymPoly expansion_coefficient(Form form, unsigned n, const QuotientSpec& spec, Evaluator& evaluator);
Evaluator make_form_evaluator(const QuotientSpec& spec);

// Lambda_23 with weights (w2w3, w1w3, w1w2) and a root xi' with xi'^W = xi
// against Lambda_13 with t -> W t, W = w1w2w3, coefficient-wise to order N.
CheckReport lambda13_substitution_check(const QuotientSpec& spec, std::size_t truncation);

struct TheoremReport {
    int theorem = 0;
    std::string context;
    Weights w{};
    unsigned n = 0;
    std::vector<std::string> labels;
    std::vector<SymPoly> expressions;
    bool pass = true;
    std::string detail;
    // Theorem 3 only: whether the fifth expression as printed also agrees.
    std::optional<bool> printed_form_holds;
};

TheoremReport verify_theorem(int id, const TwistContext& context, const Weights& w, unsigned n);
TheoremReport verify_theorem(int id, Evaluator& evaluator, unsigned n);

enum class ReductionGroup { BernoulliPowerSum, PowerSumOnly };

std::string to_string(ReductionGroup group);

CheckReport permutation_reduction_check(ReductionGroup group, const TwistContext& context, const Weights& w,
                                        unsigned n);
CheckReport permutation_reduction_check(ReductionGroup group, Evaluator& evaluator, unsigned n);

// All six permutations of w.
std::vector<Weights> permutations(const Weights& w);

// Describes the first difference of two SymPolys, or nullopt when equal.
std::optional<std::string> describe_difference(const SymPoly& a, const SymPoly& b);

} // namespace tbern
