#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dyowa/errors.hpp"

namespace dyowa {

// An n-tuple of values in [0,1], the input to every aggregation operator.
class UnitVector {
public:
    // Validates: non-empty, every component in [0,1].
    explicit UnitVector(std::vector<double> values);
    UnitVector(std::initializer_list<double> values)
        : UnitVector(std::vector<double>(values)) {}

    static UnitVector constant(std::size_t n, double value);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    std::span<const double> span() const { return values_; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

private:
    std::vector<double> values_;
};

// Nonnegative weights summing to 1 (within 1e-9).
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);
    WeightVector(std::initializer_list<double> weights)
        : WeightVector(std::vector<double>(weights)) {}

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& values() const { return weights_; }

    auto begin() const { return weights_.begin(); }
    auto end() const { return weights_.end(); }

private:
    std::vector<double> weights_;
};

// n functions of the whole input vector whose outputs sum to 1 at every
// input. Aggregating with such a family gives a dynamically weighted mean:
// the weights are recomputed from each input.
class WeightFunctionFamily {
public:
    using Evaluator = std::function<double(const UnitVector&)>;

    WeightFunctionFamily(std::string name, std::size_t arity,
                         std::vector<Evaluator> evaluators);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }

    // Evaluates all weight functions at x. Throws ArityError on a length
    // mismatch and FamilyError when the weights stray from sum 1 by more
    // than 1e-6 (looser than construction-time checks; user-supplied
    // families carry accumulated float error).
    std::vector<double> evaluate(const UnitVector& x) const;

private:
    std::string name_;
    std::size_t arity_;
    std::vector<Evaluator> evaluators_;
};

// A named aggregation operator [0,1]^n -> [0,1]. `arity` empty means the
// operator accepts any input length.
struct Aggregator {
    std::string name;
    std::optional<std::size_t> arity;  // nullopt: any length
    std::function<double(const UnitVector&)> apply;

    double operator()(const UnitVector& x) const { return apply(x); }
};

// Involutive antitonic self-map of [0,1].
struct StrongNegation {
    std::string name;
    std::function<double(double)> map;

    double operator()(double a) const { return map(a); }
};

// The standard negation a -> 1 - a.
StrongNegation standard_negation();

// Samples involutivity (|N(N(a)) - a| <= 1e-12) and antitonicity on seeded
// points. A screen, not a proof.
bool looks_like_strong_negation(const StrongNegation& neg,
                                std::size_t samples, std::uint64_t seed);

namespace detail {

// Result values of averaging operators are mathematically inside [0,1];
// tolerate rounding spill below 1e-12 and treat anything larger as a bug.
double finalize_unit(double v);

// Span-based kernels shared with the image pipelines, where building a
// UnitVector per window would dominate the cost.
double arith_on(std::span<const double> x);
double median_on(std::span<const double> x, std::vector<double>& scratch);
void h_weights_on(std::span<const double> x, std::vector<double>& scratch,
                  std::vector<double>& weights_out);
double h_on(std::span<const double> x, std::vector<double>& scratch,
            std::vector<double>& weight_scratch);
double owa_on_sorted_desc(std::span<const double> sorted_desc,
                          std::span<const double> weights);

}  // namespace detail

// Descending stable sort. Returns the sorted vector and the 0-based source
// permutation p with sorted[i] == x[p[i]]; ties keep original index order.
std::pair<UnitVector, std::vector<std::size_t>> sort_desc(const UnitVector& x);

// Weighted sum over the descending sort of x.
double owa(const WeightVector& w, const UnitVector& x);

double arith(const UnitVector& x);
double min_agg(const UnitVector& x);
double max_agg(const UnitVector& x);

// Middle order statistic; mean of the two middle values when n is even.
double median(const UnitVector& x);

// Weight vector that turns owa() into median(): for odd n all weight on the
// middle position of the descending sort, for even n half on each of the two
// middle positions.
WeightVector median_weights(std::size_t n);

// Centered palindromic weights w_j = 2(2j-1)/n^2 mirrored around the middle;
// for odd n the center takes the remaining mass.
WeightVector cowa_weights(std::size_t n);

// Dynamically weighted mean: sum f_i(x) * x_i with weights from the family.
// Returns the raw sum; it lies in [min(x), max(x)] whenever all weights are
// nonnegative.
double dyowa(const WeightFunctionFamily& family, const UnitVector& x);

// Median-deviation weights: constant vectors get 1/n each, otherwise
// w_i = (1 - |x_i - med| / sum_j |x_j - med|) / (n - 1). Requires n >= 2.
WeightVector h_weights(const UnitVector& x);

// The aggregation with the weights above. Constant input (spread <= 1e-12)
// returns the constant exactly.
double h(const UnitVector& x);

// N(f(N(x_1), ..., N(x_n))).
Aggregator dual(const Aggregator& agg, const StrongNegation& neg);

// --- ready-made aggregators -------------------------------------------------

Aggregator arith_aggregator();
Aggregator min_aggregator();
Aggregator max_aggregator();
Aggregator median_aggregator();
Aggregator owa_aggregator(WeightVector w);
Aggregator cowa_aggregator(std::size_t n);
Aggregator h_aggregator(std::size_t n);
Aggregator dyowa_aggregator(const WeightFunctionFamily& family);

// Copy of `agg` with the arity pinned to n (for property screens over
// any-arity operators).
Aggregator with_arity(Aggregator agg, std::size_t n);

// --- ready-made weight-function families -------------------------------------

// All weights 1/n; aggregates to the arithmetic mean.
WeightFunctionFamily uniform_family(std::size_t n);

// f_i(x) = w at the descending-sort rank of x_i; aggregates to owa(w, .).
WeightFunctionFamily owa_family(WeightVector w);

// f_i(x) = x_i / sum(x) (1/n at the origin). Idempotent and homogeneous but
// not monotone.
WeightFunctionFamily ratio_family(std::size_t n);

// The median-deviation family behind h().
WeightFunctionFamily h_family(std::size_t n);

}  // namespace dyowa
