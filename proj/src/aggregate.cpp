#include "dyowa/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dyowa/rng.hpp"

namespace dyowa {

namespace {

constexpr double kConstantSpread = 1e-12;  // constant-vector detection for h
constexpr double kWeightSumTol = 1e-9;     // WeightVector construction
constexpr double kFamilySumTol = 1e-6;     // family evaluation

void require_same_length(std::size_t want, std::size_t got, const char* what) {
    if (want != got) {
        std::ostringstream os;
        os << what << ": expected length " << want << ", got " << got;
        throw ArityError(os.str());
    }
}

}  // namespace

UnitVector::UnitVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("UnitVector: length must be >= 1");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (!(v >= 0.0 && v <= 1.0)) {
            std::ostringstream os;
            os << "UnitVector: component " << i << " = " << v
               << " outside [0,1]";
            throw std::invalid_argument(os.str());
        }
    }
}

UnitVector UnitVector::constant(std::size_t n, double value) {
    return UnitVector(std::vector<double>(n, value));
}

WeightVector::WeightVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("WeightVector: length must be >= 1");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!(weights_[i] >= 0.0)) {
            std::ostringstream os;
            os << "WeightVector: weight " << i << " = " << weights_[i]
               << " is negative";
            throw std::invalid_argument(os.str());
        }
        sum += weights_[i];
    }
    if (std::abs(sum - 1.0) > kWeightSumTol) {
        std::ostringstream os;
        os << "WeightVector: weights sum to " << sum << ", expected 1";
        throw std::invalid_argument(os.str());
    }
}

WeightFunctionFamily::WeightFunctionFamily(std::string name, std::size_t arity,
                                           std::vector<Evaluator> evaluators)
    : name_(std::move(name)), arity_(arity), evaluators_(std::move(evaluators)) {
    if (arity_ == 0) {
        throw std::invalid_argument("WeightFunctionFamily: arity must be >= 1");
    }
    if (evaluators_.size() != arity_) {
        throw std::invalid_argument(
            "WeightFunctionFamily: need exactly one evaluator per component");
    }
}

std::vector<double> WeightFunctionFamily::evaluate(const UnitVector& x) const {
    require_same_length(arity_, x.size(), "WeightFunctionFamily::evaluate");
    std::vector<double> w(arity_);
    double sum = 0.0;
    for (std::size_t i = 0; i < arity_; ++i) {
        w[i] = evaluators_[i](x);
        sum += w[i];
    }
    if (std::abs(sum - 1.0) > kFamilySumTol) {
        std::ostringstream os;
        os << "family '" << name_ << "': weights sum to " << sum
           << " at this input, expected 1 within " << kFamilySumTol;
        throw FamilyError(os.str());
    }
    return w;
}

StrongNegation standard_negation() {
    return StrongNegation{"1-a", [](double a) { return 1.0 - a; }};
}

bool looks_like_strong_negation(const StrongNegation& neg, std::size_t samples,
                                std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const double a = rng.uniform01();
        const double b = rng.uniform01();
        if (std::abs(neg(neg(a)) - a) > 1e-12) return false;
        const double lo = std::min(a, b), hi = std::max(a, b);
        if (neg(lo) < neg(hi) - 1e-12) return false;
    }
    return std::abs(neg(neg(1.0)) - 1.0) <= 1e-12 &&
           std::abs(neg(neg(0.0)) - 0.0) <= 1e-12;
}

namespace detail {

double finalize_unit(double v) {
    if (v >= 0.0 && v <= 1.0) return v;
    if (v > -kConstantSpread && v < 1.0 + kConstantSpread) {
        return std::clamp(v, 0.0, 1.0);
    }
    std::ostringstream os;
    os << "aggregation produced " << v << ", outside [0,1] by more than 1e-12";
    throw std::logic_error(os.str());
}

double arith_on(std::span<const double> x) {
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    return finalize_unit(sum / static_cast<double>(x.size()));
}

double median_on(std::span<const double> x, std::vector<double>& scratch) {
    scratch.assign(x.begin(), x.end());
    const std::size_t n = scratch.size();
    const std::size_t mid = n / 2;
    if (n % 2 == 1) {
        std::nth_element(scratch.begin(), scratch.begin() + mid, scratch.end());
        return scratch[mid];
    }
    std::nth_element(scratch.begin(), scratch.begin() + mid, scratch.end());
    const double upper = scratch[mid];
    const double lower =
        *std::max_element(scratch.begin(), scratch.begin() + mid);
    return (lower + upper) / 2.0;
}

void h_weights_on(std::span<const double> x, std::vector<double>& scratch,
                  std::vector<double>& weights_out) {
    const std::size_t n = x.size();
    if (n < 2) {
        throw ArityError("h_weights: needs at least 2 components");
    }
    weights_out.resize(n);
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*hi - *lo <= kConstantSpread) {
        std::fill(weights_out.begin(), weights_out.end(),
                  1.0 / static_cast<double>(n));
        return;
    }
    const double med = median_on(x, scratch);
    double dev_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        weights_out[i] = std::abs(x[i] - med);
        dev_sum += weights_out[i];
    }
    const double scale = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        weights_out[i] = scale * (1.0 - weights_out[i] / dev_sum);
    }
}

double h_on(std::span<const double> x, std::vector<double>& scratch,
            std::vector<double>& weight_scratch) {
    const std::size_t n = x.size();
    if (n < 2) {
        throw ArityError("h: needs at least 2 components");
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*hi - *lo <= kConstantSpread) {
        // The median is itself a component, so a truly constant input comes
        // back exactly; a weighted sum of 1/n terms would not.
        return median_on(x, scratch);
    }
    h_weights_on(x, scratch, weight_scratch);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += weight_scratch[i] * x[i];
    return finalize_unit(acc);
}

double owa_on_sorted_desc(std::span<const double> sorted_desc,
                          std::span<const double> weights) {
    double acc = 0.0;
    for (std::size_t i = 0; i < sorted_desc.size(); ++i) {
        acc += weights[i] * sorted_desc[i];
    }
    return finalize_unit(acc);
}

}  // namespace detail

std::pair<UnitVector, std::vector<std::size_t>> sort_desc(const UnitVector& x) {
    std::vector<std::size_t> perm(x.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&x](std::size_t a, std::size_t b) { return x[a] > x[b]; });
    std::vector<double> sorted(x.size());
    for (std::size_t i = 0; i < perm.size(); ++i) sorted[i] = x[perm[i]];
    return {UnitVector(std::move(sorted)), std::move(perm)};
}

double owa(const WeightVector& w, const UnitVector& x) {
    require_same_length(w.size(), x.size(), "owa");
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return detail::owa_on_sorted_desc(sorted, w.values());
}

double arith(const UnitVector& x) { return detail::arith_on(x.span()); }

double min_agg(const UnitVector& x) {
    return *std::min_element(x.begin(), x.end());
}

double max_agg(const UnitVector& x) {
    return *std::max_element(x.begin(), x.end());
}

double median(const UnitVector& x) {
    std::vector<double> scratch;
    return detail::median_on(x.span(), scratch);
}

WeightVector median_weights(std::size_t n) {
    if (n == 0) throw ArityError("median_weights: n must be >= 1");
    std::vector<double> w(n, 0.0);
    if (n % 2 == 1) {
        w[n / 2] = 1.0;
    } else {
        w[n / 2 - 1] = 0.5;
        w[n / 2] = 0.5;
    }
    return WeightVector(std::move(w));
}

WeightVector cowa_weights(std::size_t n) {
    if (n == 0) throw ArityError("cowa_weights: n must be >= 1");
    if (n == 1) return WeightVector({1.0});
    std::vector<double> w(n, 0.0);
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    const std::size_t half = n / 2;  // floor; equals (n-1)/2 for odd n
    double head_sum = 0.0;
    for (std::size_t j = 1; j <= half; ++j) {
        const double wj = 2.0 * (2.0 * static_cast<double>(j) - 1.0) / n2;
        w[j - 1] = wj;
        w[n - j] = wj;  // mirror
        head_sum += wj;
    }
    if (n % 2 == 1) {
        w[half] = 1.0 - 2.0 * head_sum;  // center takes the remaining mass
    }
    return WeightVector(std::move(w));
}

double dyowa(const WeightFunctionFamily& family, const UnitVector& x) {
    const std::vector<double> w = family.evaluate(x);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * x[i];
    return acc;
}

WeightVector h_weights(const UnitVector& x) {
    std::vector<double> scratch, w;
    detail::h_weights_on(x.span(), scratch, w);
    return WeightVector(std::move(w));
}

double h(const UnitVector& x) {
    std::vector<double> scratch, weights;
    return detail::h_on(x.span(), scratch, weights);
}

Aggregator dual(const Aggregator& agg, const StrongNegation& neg) {
    return Aggregator{
        agg.name + "_dual",
        agg.arity,
        [apply = agg.apply, map = neg.map](const UnitVector& x) {
            std::vector<double> negated(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                negated[i] = detail::finalize_unit(map(x[i]));
            }
            return detail::finalize_unit(
                map(apply(UnitVector(std::move(negated)))));
        }};
}

Aggregator arith_aggregator() {
    return Aggregator{"arith", std::nullopt, [](const UnitVector& x) {
        return arith(x);
    }};
}

Aggregator min_aggregator() {
    return Aggregator{"min", std::nullopt, [](const UnitVector& x) {
        return min_agg(x);
    }};
}

Aggregator max_aggregator() {
    return Aggregator{"max", std::nullopt, [](const UnitVector& x) {
        return max_agg(x);
    }};
}

Aggregator median_aggregator() {
    return Aggregator{"median", std::nullopt, [](const UnitVector& x) {
        return median(x);
    }};
}

Aggregator owa_aggregator(WeightVector w) {
    const std::size_t n = w.size();
    return Aggregator{"owa", n, [w = std::move(w)](const UnitVector& x) {
        return owa(w, x);
    }};
}

Aggregator cowa_aggregator(std::size_t n) {
    return Aggregator{"cowa", n, [w = cowa_weights(n)](const UnitVector& x) {
        return owa(w, x);
    }};
}

Aggregator h_aggregator(std::size_t n) {
    if (n < 2) throw ArityError("h_aggregator: needs arity >= 2");
    return Aggregator{"h", n, [](const UnitVector& x) { return h(x); }};
}

Aggregator dyowa_aggregator(const WeightFunctionFamily& family) {
    return Aggregator{family.name(), family.arity(),
                      [family](const UnitVector& x) {
                          return detail::finalize_unit(dyowa(family, x));
                      }};
}

Aggregator with_arity(Aggregator agg, std::size_t n) {
    if (agg.arity && *agg.arity != n) {
        std::ostringstream os;
        os << "with_arity: aggregator '" << agg.name << "' is fixed at arity "
           << *agg.arity;
        throw ArityError(os.str());
    }
    agg.arity = n;
    return agg;
}

WeightFunctionFamily uniform_family(std::size_t n) {
    std::vector<WeightFunctionFamily::Evaluator> fs(
        n, [n](const UnitVector&) { return 1.0 / static_cast<double>(n); });
    return WeightFunctionFamily("uniform", n, std::move(fs));
}

WeightFunctionFamily owa_family(WeightVector w) {
    const std::size_t n = w.size();
    std::vector<WeightFunctionFamily::Evaluator> fs;
    fs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        fs.push_back([i, w](const UnitVector& x) {
            // Weight of component i is w at its descending-sort rank.
            const auto perm = sort_desc(x).second;
            for (std::size_t rank = 0; rank < perm.size(); ++rank) {
                if (perm[rank] == i) return w[rank];
            }
            return 0.0;  // unreachable: perm is a permutation
        });
    }
    return WeightFunctionFamily("owa", n, std::move(fs));
}

WeightFunctionFamily ratio_family(std::size_t n) {
    std::vector<WeightFunctionFamily::Evaluator> fs;
    fs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        fs.push_back([i, n](const UnitVector& x) {
            const double sum = std::accumulate(x.begin(), x.end(), 0.0);
            if (sum == 0.0) return 1.0 / static_cast<double>(n);
            return x[i] / sum;
        });
    }
    return WeightFunctionFamily("ratio", n, std::move(fs));
}

WeightFunctionFamily h_family(std::size_t n) {
    if (n < 2) throw ArityError("h_family: needs arity >= 2");
    std::vector<WeightFunctionFamily::Evaluator> fs;
    fs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        fs.push_back([i](const UnitVector& x) { return h_weights(x)[i]; });
    }
    return WeightFunctionFamily("h", n, std::move(fs));
}

}  // namespace dyowa
