#pragma once

#include "polyspace/rational.hpp"

#include <optional>
#include <vector>

namespace polyspace {

/// sum_i coeffs[i] * l_i < 0 (strict) or <= 0.
struct LinearConstraint
{
    std::vector<Rational> coeffs;
    bool strict = true;
};

/// Homogeneous constraints over n variables together with the implicit
/// conditions l_i > 0 and sum l_i = 1.
struct LinearConstraintSystem
{
    int n = 0;
    std::vector<LinearConstraint> rows;

    void add_strict(std::vector<Rational> coeffs) { rows.push_back({std::move(coeffs), true}); }
    void add_non_strict(std::vector<Rational> coeffs) { rows.push_back({std::move(coeffs), false}); }
};

struct FeasibilityResult
{
    bool feasible = false;
    /// Largest uniform slack t with every strict row <= -t and every l_i >= t,
    /// over sum l_i <= 1. Feasible iff positive.
    Rational margin = 0;
    /// Normalized interior point, present when feasible.
    std::optional<std::vector<Rational>> witness;
};

/// Decides whether the open polyhedron is nonempty by maximizing a shared
/// slack variable with an exact rational simplex method (Bland's rule).
/// Every right-hand side is 0 or 1, so the slack basis is feasible and no
/// phase one is needed.
FeasibilityResult solve_strict_feasibility(const LinearConstraintSystem& system);

bool lp_feasible(const LinearConstraintSystem& system);

/// True iff `point` satisfies every row and positivity exactly.
bool satisfies(const LinearConstraintSystem& system, const std::vector<Rational>& point);

} // namespace polyspace
