#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyowa/aggregate.hpp"

namespace dyowa {

// Algebraic properties screened by seeded random sampling. Sampling can
// refute a universally quantified claim but never prove it; reports say so.
enum class Property {
    idempotent,
    symmetric,
    shift_invariant,
    homogeneous,
    averaging_bounds,
    monotone,
};

Property property_from_name(const std::string& name);  // UsageError if unknown
std::string property_name(Property p);

struct PropertyReport {
    bool holds = true;
    std::size_t samples_run = 0;
    // First refuting input; for monotone/shift/homogeneous checks the second
    // slot carries the comparison vector (or the shifted/scaled one).
    std::optional<UnitVector> counterexample;
    std::optional<UnitVector> counterexample_second;
    std::string detail;
};

struct CheckOptions {
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    // Order k for the homogeneity check: f(lambda*x) == lambda^k * f(x).
    double homogeneity_order = 1.0;
    // Probed before any random sampling. For monotone these are (x, y) pairs
    // with x <= y componentwise; other properties use only `first`.
    std::vector<std::pair<UnitVector, UnitVector>> fixed_pairs;
    std::vector<UnitVector> fixed_inputs;
};

// Evaluates the property on seeded random inputs of the aggregator's arity
// (which must be pinned; see with_arity). Deterministic given the seed.
PropertyReport check_property(const Aggregator& agg, Property property,
                              const CheckOptions& options);

PropertyReport check_property(const Aggregator& agg, Property property,
                              std::size_t samples, std::uint64_t seed,
                              double tolerance);

enum class SpecialElement {
    neutral,
    absorbing,
    zero_divisor,
    one_divisor,
};

SpecialElement special_element_from_name(const std::string& name);
std::string special_element_name(SpecialElement kind);

struct SpecialElementReport {
    bool found = false;
    std::vector<double> candidates;
    std::size_t probes_per_candidate = 0;
};

// Grid-scans candidate elements a in {0, step, 2*step, ..., 1} against seeded
// companion vectors, placing the candidate at every coordinate.
//
// neutral/absorbing: a candidate is kept when it survives every probe — a
// necessary-condition screen, not a proof. zero/one divisor: a candidate is
// kept when some probe witnesses the defining equation, which *is* a proof
// of existence (the grid is scanned over ]0,1[ for these).
SpecialElementReport search_special_element(const Aggregator& agg,
                                            SpecialElement kind,
                                            double grid_step,
                                            std::size_t probes = 1000,
                                            std::uint64_t seed = 0x5eed,
                                            double tolerance = 1e-9);

}  // namespace dyowa
