#include "polyspace/length_vector.hpp"

#include "polyspace/errors.hpp"
#include "polyspace/subset.hpp"

#include <algorithm>
#include <numeric>

namespace polyspace {

namespace {

constexpr std::int64_t kSmallTotalLimit = std::int64_t{1} << 62;

} // namespace

LengthVector::LengthVector(std::vector<Rational> coords) : coords_(std::move(coords))
{
    if (coords_.empty()) throw DomainError("length vector needs at least one coordinate");
    if (static_cast<int>(coords_.size()) > kMaxLinks)
        throw DomainError("length vector has " + std::to_string(coords_.size()) + " coordinates; at most 63 are supported");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] <= 0)
            throw DomainError("coordinate " + std::to_string(i + 1) + " is not positive: " + to_string(coords_[i]));
    finish();
}

LengthVector LengthVector::from_weights(std::span<const std::int64_t> weights)
{
    if (weights.empty()) throw DomainError("length vector needs at least one coordinate");
    if (static_cast<int>(weights.size()) > kMaxLinks) throw DomainError("length vector has more than 63 coordinates");
    BigInt total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0) throw DomainError("weight " + std::to_string(i + 1) + " is not positive");
        total += weights[i];
    }
    std::vector<Rational> coords;
    coords.reserve(weights.size());
    for (auto w : weights) coords.emplace_back(BigInt(w), total);
    return LengthVector(std::move(coords));
}

LengthVector LengthVector::parse(std::string_view csv)
{
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto comma = csv.find(',', start);
        auto token = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coords.push_back(parse_rational(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return LengthVector(std::move(coords));
}

void LengthVector::finish()
{
    Rational s = 0;
    for (const auto& c : coords_) s += c;
    normalized_ = (s == 1);

    argmax_ = 0;
    for (int i = 1; i < n(); ++i)
        if (coords_[static_cast<std::size_t>(i)] > coords_[static_cast<std::size_t>(argmax_)]) argmax_ = i;

    // Common denominator, then strip the common factor of the numerators.
    BigInt lcm_den = 1;
    for (const auto& c : coords_) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    std::vector<BigInt> w;
    w.reserve(coords_.size());
    BigInt g = 0;
    for (const auto& c : coords_) {
        w.push_back(numerator(c) * (lcm_den / denominator(c)));
        g = boost::multiprecision::gcd(g, w.back());
    }
    BigInt total = 0;
    for (auto& x : w) {
        x /= g;
        total += x;
    }

    if (total < kSmallTotalLimit) {
        Small small;
        small.w.reserve(w.size());
        for (const auto& x : w) small.w.push_back(x.convert_to<std::int64_t>());
        small.total = total.convert_to<std::int64_t>();
        weights_ = std::move(small);
    } else {
        weights_ = Big{std::move(w), std::move(total)};
    }
}

Rational LengthVector::sum() const
{
    Rational s = 0;
    for (const auto& c : coords_) s += c;
    return s;
}

const Rational& LengthVector::max_coord() const
{
    return coords_[static_cast<std::size_t>(argmax_)];
}

std::vector<double> LengthVector::to_doubles() const
{
    const Rational s = sum();
    std::vector<double> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(to_double(c / s));
    return out;
}

LengthVector LengthVector::permuted(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n()) throw DomainError("permutation size does not match n");
    std::vector<bool> seen(perm.size(), false);
    std::vector<Rational> out;
    out.reserve(perm.size());
    for (int p : perm) {
        if (p < 0 || p >= n() || seen[static_cast<std::size_t>(p)]) throw DomainError("invalid permutation");
        seen[static_cast<std::size_t>(p)] = true;
        out.push_back(coords_[static_cast<std::size_t>(p)]);
    }
    return LengthVector(std::move(out));
}

LengthVector LengthVector::sorted_ascending() const
{
    std::vector<int> order(coords_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
        return coords_[static_cast<std::size_t>(a)] < coords_[static_cast<std::size_t>(b)];
    });
    return permuted(order);
}

std::vector<std::string> to_strings(const LengthVector& lengths)
{
    std::vector<std::string> out;
    out.reserve(lengths.coords().size());
    for (const auto& c : lengths.coords()) out.push_back(to_string(c));
    return out;
}

std::string to_csv(const LengthVector& lengths)
{
    std::string s;
    for (const auto& c : lengths.coords()) {
        if (!s.empty()) s += ",";
        s += to_string(c);
    }
    return s;
}

} // namespace polyspace
