#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace blueprint {

/// Exact scalar field for every decision in the library. mpq_class keeps values
/// canonical (reduced, positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Accepts "p" or "p/q" with optional sign; throws Error{Parse} otherwise.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// Seeded random stream. Substreams are derived by tag so that independent tasks
/// draw reproducible values regardless of evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }
    Rng split(std::uint64_t tag) const;

    std::int64_t integer(std::int64_t lo, std::int64_t hi);
    /// Uniform in [-bound, bound] \ {0}.
    std::int64_t nonzero_integer(std::int64_t bound);
    Vector integer_vector(std::size_t length, std::int64_t bound);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

inline constexpr std::int64_t kDefaultCoefficientBound = 1'000'000;

}  // namespace blueprint
