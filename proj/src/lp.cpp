#include "polyspace/lp.hpp"

#include "polyspace/errors.hpp"

#include <stdexcept>

namespace polyspace {

namespace {

/// Dense tableau for max c.x subject to A x <= b, x >= 0, with b >= 0.
/// Column j of the tableau always holds nonbasic variable nonbasic_[j].
class Tableau
{
public:
    Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
    {
        const std::size_t vars = c_.size();
        nonbasic_.resize(vars);
        for (std::size_t j = 0; j < vars; ++j) nonbasic_[j] = j;
        basic_.resize(b_.size());
        for (std::size_t i = 0; i < b_.size(); ++i) basic_[i] = vars + i;
    }

    /// Returns false if unbounded.
    bool optimize()
    {
        for (;;) {
            // Bland: smallest variable id with positive reduced cost enters.
            std::size_t enter = c_.size();
            for (std::size_t j = 0; j < c_.size(); ++j)
                if (c_[j] > 0 && (enter == c_.size() || nonbasic_[j] < nonbasic_[enter])) enter = j;
            if (enter == c_.size()) return true;

            std::size_t leave = b_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < b_.size(); ++i) {
                if (a_[i][enter] <= 0) continue;
                Rational ratio = b_[i] / a_[i][enter];
                if (leave == b_.size() || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[leave])) {
                    leave = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leave == b_.size()) return false;
            pivot(leave, enter);
        }
    }

    const Rational& objective() const { return objective_; }

    std::vector<Rational> primal(std::size_t original_vars) const
    {
        std::vector<Rational> x(original_vars, Rational(0));
        for (std::size_t i = 0; i < basic_.size(); ++i)
            if (basic_[i] < original_vars) x[basic_[i]] = b_[i];
        return x;
    }

private:
    void pivot(std::size_t r, std::size_t s)
    {
        const Rational inv = 1 / a_[r][s];
        auto& row_r = a_[r];
        for (std::size_t j = 0; j < row_r.size(); ++j)
            if (j != s) row_r[j] *= inv;
        b_[r] *= inv;
        row_r[s] = inv;

        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i == r) continue;
            auto& row = a_[i];
            if (row[s] == 0) continue;
            const Rational f = row[s];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (j != s && row_r[j] != 0) row[j] -= f * row_r[j];
            b_[i] -= f * b_[r];
            row[s] = -f * inv;
        }

        if (c_[s] != 0) {
            const Rational f = c_[s];
            for (std::size_t j = 0; j < c_.size(); ++j)
                if (j != s && row_r[j] != 0) c_[j] -= f * row_r[j];
            objective_ += f * b_[r];
            c_[s] = -f * inv;
        }
        std::swap(basic_[r], nonbasic_[s]);
    }

    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<Rational> c_;
    std::vector<std::size_t> basic_;
    std::vector<std::size_t> nonbasic_;
    Rational objective_ = 0;
};

void check_shape(const LinearConstraintSystem& system)
{
    if (system.n < 1) throw DomainError("constraint system needs at least one variable");
    for (const auto& row : system.rows)
        if (static_cast<int>(row.coeffs.size()) != system.n)
            throw DomainError("constraint row has " + std::to_string(row.coeffs.size()) + " coefficients, expected " + std::to_string(system.n));
}

} // namespace

FeasibilityResult solve_strict_feasibility(const LinearConstraintSystem& system)
{
    check_shape(system);
    const auto n = static_cast<std::size_t>(system.n);
    const std::size_t t = n; // index of the slack variable

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    a.reserve(system.rows.size() + n + 1);
    for (const auto& row : system.rows) {
        std::vector<Rational> r(row.coeffs);
        r.emplace_back(row.strict ? 1 : 0);
        a.push_back(std::move(r));
        b.emplace_back(0);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> r(n + 1, Rational(0));
        r[i] = -1;
        r[t] = 1;
        a.push_back(std::move(r));
        b.emplace_back(0);
    }
    a.emplace_back(n + 1, Rational(1));
    a.back()[t] = 0;
    b.emplace_back(1);

    std::vector<Rational> c(n + 1, Rational(0));
    c[t] = 1;

    Tableau tableau(std::move(a), std::move(b), std::move(c));
    if (!tableau.optimize()) throw std::logic_error("strict feasibility LP reported unbounded");

    FeasibilityResult result;
    result.margin = tableau.objective();
    result.feasible = result.margin > 0;
    if (result.feasible) {
        auto x = tableau.primal(n + 1);
        x.pop_back();
        Rational sum = 0;
        for (const auto& v : x) sum += v;
        for (auto& v : x) v /= sum;
        if (!satisfies(system, x)) throw std::logic_error("LP witness violates its own constraints");
        result.witness = std::move(x);
    }
    return result;
}

bool lp_feasible(const LinearConstraintSystem& system)
{
    return solve_strict_feasibility(system).feasible;
}

bool satisfies(const LinearConstraintSystem& system, const std::vector<Rational>& point)
{
    if (static_cast<int>(point.size()) != system.n) return false;
    for (const auto& v : point)
        if (v <= 0) return false;
    for (const auto& row : system.rows) {
        Rational s = 0;
        for (std::size_t i = 0; i < point.size(); ++i) s += row.coeffs[i] * point[i];
        if (row.strict ? s >= 0 : s > 0) return false;
    }
    return true;
}

} // namespace polyspace
