#include "dyowa/properties.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dyowa/rng.hpp"

namespace dyowa {

namespace {

std::size_t required_arity(const Aggregator& agg) {
    if (!agg.arity) {
        throw UsageError("property check: aggregator '" + agg.name +
                         "' has no fixed arity; pin one with with_arity()");
    }
    if (*agg.arity == 0) {
        throw UsageError("property check: arity must be >= 1");
    }
    return *agg.arity;
}

UnitVector random_vector(SplitMix64& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& c : v) c = rng.uniform01();
    return UnitVector(std::move(v));
}

UnitVector shifted(const UnitVector& x, double lambda) {
    std::vector<double> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        v[i] = std::clamp(x[i] + lambda, 0.0, 1.0);
    }
    return UnitVector(std::move(v));
}

UnitVector scaled(const UnitVector& x, double lambda) {
    std::vector<double> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = lambda * x[i];
    return UnitVector(std::move(v));
}

std::string describe(const UnitVector& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ", ";
        os << x[i];
    }
    os << ")";
    return os.str();
}

struct Violation {
    UnitVector first;
    std::optional<UnitVector> second;
    std::string detail;
};

// One probe per call; nullopt when the probe passed.
class PropertyProbe {
public:
    PropertyProbe(const Aggregator& agg, const CheckOptions& opt)
        : agg_(agg), opt_(opt) {}

    std::optional<Violation> idempotent(double c) const {
        const std::size_t n = required_arity(agg_);
        UnitVector x = UnitVector::constant(n, c);
        const double got = agg_(x);
        if (std::abs(got - c) > opt_.tolerance) {
            std::ostringstream os;
            os << "f" << describe(x) << " = " << got << " != " << c;
            return Violation{std::move(x), std::nullopt, os.str()};
        }
        return std::nullopt;
    }

    std::optional<Violation> symmetric(const UnitVector& x,
                                       SplitMix64& rng) const {
        std::vector<double> perm(x.begin(), x.end());
        for (std::size_t i = perm.size(); i > 1; --i) {
            std::swap(perm[i - 1], perm[rng.index(i)]);
        }
        UnitVector y(std::move(perm));
        const double fx = agg_(x), fy = agg_(y);
        if (std::abs(fx - fy) > opt_.tolerance) {
            std::ostringstream os;
            os << "f" << describe(x) << " = " << fx << " but f" << describe(y)
               << " = " << fy;
            return Violation{x, std::move(y), os.str()};
        }
        return std::nullopt;
    }

    std::optional<Violation> shift_invariant(const UnitVector& x,
                                             SplitMix64& rng) const {
        const double max = *std::max_element(x.begin(), x.end());
        const double min = *std::min_element(x.begin(), x.end());
        const double lambda = rng.uniform(-min, 1.0 - max);
        const double fx = agg_(x);
        if (fx + lambda < 0.0 || fx + lambda > 1.0) {
            return std::nullopt;  // property only constrains in-range shifts
        }
        UnitVector y = shifted(x, lambda);
        const double fy = agg_(y);
        if (std::abs(fy - (fx + lambda)) > opt_.tolerance) {
            std::ostringstream os;
            os << "f(x + " << lambda << ") = " << fy << " but f(x) + lambda = "
               << fx + lambda << " for x = " << describe(x);
            return Violation{x, std::move(y), os.str()};
        }
        return std::nullopt;
    }

    std::optional<Violation> homogeneous(const UnitVector& x,
                                         SplitMix64& rng) const {
        const double lambda = rng.uniform01();
        UnitVector y = scaled(x, lambda);
        const double fy = agg_(y);
        const double want = std::pow(lambda, opt_.homogeneity_order) * agg_(x);
        if (std::abs(fy - want) > opt_.tolerance) {
            std::ostringstream os;
            os << "f(" << lambda << " * x) = " << fy << " but lambda^k f(x) = "
               << want << " for x = " << describe(x);
            return Violation{x, std::move(y), os.str()};
        }
        return std::nullopt;
    }

    std::optional<Violation> averaging_bounds(const UnitVector& x) const {
        const double fx = agg_(x);
        const double lo = *std::min_element(x.begin(), x.end());
        const double hi = *std::max_element(x.begin(), x.end());
        if (fx < lo - opt_.tolerance || fx > hi + opt_.tolerance) {
            std::ostringstream os;
            os << "f" << describe(x) << " = " << fx << " outside [" << lo
               << ", " << hi << "]";
            return Violation{x, std::nullopt, os.str()};
        }
        return std::nullopt;
    }

    std::optional<Violation> monotone(const UnitVector& x,
                                      const UnitVector& y) const {
        const double fx = agg_(x), fy = agg_(y);
        if (fx > fy + opt_.tolerance) {
            std::ostringstream os;
            os << "x <= y but f" << describe(x) << " = " << fx << " > f"
               << describe(y) << " = " << fy;
            return Violation{x, y, os.str()};
        }
        return std::nullopt;
    }

private:
    const Aggregator& agg_;
    const CheckOptions& opt_;
};

PropertyReport from_violation(std::size_t samples_run, Violation v) {
    PropertyReport report;
    report.holds = false;
    report.samples_run = samples_run;
    report.counterexample = std::move(v.first);
    report.counterexample_second = std::move(v.second);
    report.detail = std::move(v.detail);
    return report;
}

}  // namespace

Property property_from_name(const std::string& name) {
    if (name == "idempotent") return Property::idempotent;
    if (name == "symmetric") return Property::symmetric;
    if (name == "shift_invariant") return Property::shift_invariant;
    if (name == "homogeneous") return Property::homogeneous;
    if (name == "averaging_bounds") return Property::averaging_bounds;
    if (name == "monotone") return Property::monotone;
    throw UsageError("unknown property '" + name + "'");
}

std::string property_name(Property p) {
    switch (p) {
        case Property::idempotent: return "idempotent";
        case Property::symmetric: return "symmetric";
        case Property::shift_invariant: return "shift_invariant";
        case Property::homogeneous: return "homogeneous";
        case Property::averaging_bounds: return "averaging_bounds";
        case Property::monotone: return "monotone";
    }
    return "?";
}

PropertyReport check_property(const Aggregator& agg, Property property,
                              const CheckOptions& options) {
    const std::size_t n = required_arity(agg);
    if (options.samples < 1) {
        throw UsageError("check_property: samples must be >= 1");
    }
    PropertyProbe probe(agg, options);
    SplitMix64 rng(options.seed);
    std::size_t run = 0;

    auto run_one = [&](const UnitVector& x,
                       const UnitVector* y) -> std::optional<Violation> {
        switch (property) {
            case Property::idempotent: return probe.idempotent(x[0]);
            case Property::symmetric: return probe.symmetric(x, rng);
            case Property::shift_invariant: return probe.shift_invariant(x, rng);
            case Property::homogeneous: return probe.homogeneous(x, rng);
            case Property::averaging_bounds: return probe.averaging_bounds(x);
            case Property::monotone: {
                if (y) return probe.monotone(x, *y);
                // random x <= y, componentwise
                std::vector<double> lo(n), hi(n);
                for (std::size_t i = 0; i < n; ++i) {
                    lo[i] = rng.uniform01();
                    hi[i] = std::clamp(lo[i] + rng.uniform01() * (1.0 - lo[i]),
                                       lo[i], 1.0);
                }
                return probe.monotone(UnitVector(std::move(lo)),
                                      UnitVector(std::move(hi)));
            }
        }
        return std::nullopt;
    };

    for (const auto& [x, y] : options.fixed_pairs) {
        ++run;
        if (auto v = run_one(x, &y)) return from_violation(run, std::move(*v));
    }
    for (const auto& x : options.fixed_inputs) {
        ++run;
        if (auto v = run_one(x, nullptr)) return from_violation(run, std::move(*v));
    }
    for (std::size_t s = 0; s < options.samples; ++s) {
        ++run;
        UnitVector x = random_vector(rng, n);
        if (auto v = run_one(x, nullptr)) return from_violation(run, std::move(*v));
    }

    PropertyReport report;
    report.holds = true;
    report.samples_run = run;
    report.detail = "no counterexample in " + std::to_string(run) + " probes";
    return report;
}

PropertyReport check_property(const Aggregator& agg, Property property,
                              std::size_t samples, std::uint64_t seed,
                              double tolerance) {
    CheckOptions options;
    options.samples = samples;
    options.seed = seed;
    options.tolerance = tolerance;
    return check_property(agg, property, options);
}

SpecialElement special_element_from_name(const std::string& name) {
    if (name == "neutral") return SpecialElement::neutral;
    if (name == "absorbing") return SpecialElement::absorbing;
    if (name == "zero_divisor") return SpecialElement::zero_divisor;
    if (name == "one_divisor") return SpecialElement::one_divisor;
    throw UsageError("unknown special element kind '" + name + "'");
}

std::string special_element_name(SpecialElement kind) {
    switch (kind) {
        case SpecialElement::neutral: return "neutral";
        case SpecialElement::absorbing: return "absorbing";
        case SpecialElement::zero_divisor: return "zero_divisor";
        case SpecialElement::one_divisor: return "one_divisor";
    }
    return "?";
}

SpecialElementReport search_special_element(const Aggregator& agg,
                                            SpecialElement kind,
                                            double grid_step,
                                            std::size_t probes,
                                            std::uint64_t seed,
                                            double tolerance) {
    if (!(grid_step > 0.0 && grid_step < 1.0)) {
        throw UsageError("search_special_element: grid_step must be in (0,1)");
    }
    const std::size_t n = required_arity(agg);

    std::vector<double> grid;
    for (double a = 0.0; a < 1.0 - 1e-12; a += grid_step) grid.push_back(a);
    grid.push_back(1.0);
    const bool divisor_kind = kind == SpecialElement::zero_divisor ||
                              kind == SpecialElement::one_divisor;
    if (divisor_kind) {
        // divisors live in the open interval
        std::erase_if(grid, [](double a) { return a <= 0.0 || a >= 1.0; });
    }

    SpecialElementReport report;
    report.probes_per_candidate = probes;

    // One probe: candidate `a` placed at position `pos` among random
    // companions (for neutral: `t` at pos, `a` everywhere else). Returns
    // whether the probe satisfied the defining equation.
    auto probe_satisfies = [&](double a, std::size_t pos,
                               const std::vector<double>& companions,
                               double t) {
        std::vector<double> v(n);
        for (std::size_t i = 0, c = 0; i < n; ++i) {
            if (i == pos) continue;
            v[i] = companions[c++];
        }
        double expected = 0.0;
        switch (kind) {
            case SpecialElement::neutral:
                for (std::size_t i = 0; i < n; ++i) v[i] = (i == pos) ? t : a;
                expected = t;
                break;
            case SpecialElement::absorbing:
                v[pos] = a;
                expected = a;
                break;
            case SpecialElement::zero_divisor:
            case SpecialElement::one_divisor:
                v[pos] = a;
                break;
        }
        const double out = agg(UnitVector(std::move(v)));
        switch (kind) {
            case SpecialElement::neutral:
            case SpecialElement::absorbing:
                return std::abs(out - expected) <= tolerance;
            case SpecialElement::zero_divisor:
                return out <= tolerance;
            case SpecialElement::one_divisor:
                return out >= 1.0 - tolerance;
        }
        return false;
    };

    for (double a : grid) {
        SplitMix64 rng(seed);  // same probe stream for every candidate
        bool witnessed = false;   // divisor kinds: some probe satisfied
        bool survived = true;     // neutral/absorbing: every probe satisfied
        for (std::size_t p = 0; p < probes; ++p) {
            std::vector<double> companions(n - 1);
            for (auto& c : companions) {
                switch (kind) {
                    case SpecialElement::zero_divisor:
                        c = 1.0 - rng.uniform01() * (1.0 - 1e-6);  // (0,1]
                        break;
                    case SpecialElement::one_divisor:
                        c = rng.uniform01() * (1.0 - 1e-6);  // [0,1)
                        break;
                    default:
                        c = rng.uniform01();
                }
            }
            const double t = rng.uniform01();  // neutral's free argument
            for (std::size_t pos = 0; pos < n; ++pos) {
                const bool ok = probe_satisfies(a, pos, companions, t);
                if (divisor_kind) {
                    witnessed = witnessed || ok;
                } else {
                    survived = survived && ok;
                }
            }
            if (divisor_kind ? witnessed : !survived) break;
        }
        if (divisor_kind ? witnessed : survived) report.candidates.push_back(a);
    }
    report.found = !report.candidates.empty();
    return report;
}

}  // namespace dyowa
