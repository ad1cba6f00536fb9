#include "blueprint/rational.hpp"

#include "blueprint/error.hpp"

#include <cctype>

namespace blueprint {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw Error(ErrorCode::Parse, "not a rational literal: '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    Rational canonical = value;
    canonical.canonicalize();
    return canonical.get_str(10);
}

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::split(std::uint64_t tag) const {
    return Rng(splitmix64(seed_ ^ splitmix64(tag + 0x632be59bd9b4e019ULL)));
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    return dist(engine_);
}

std::int64_t Rng::nonzero_integer(std::int64_t bound) {
    for (;;) {
        const auto x = integer(-bound, bound);
        if (x != 0) return x;
    }
}

Vector Rng::integer_vector(std::size_t length, std::int64_t bound) {
    Vector v;
    v.reserve(length);
    for (std::size_t i = 0; i < length; ++i) v.emplace_back(static_cast<long>(integer(-bound, bound)));
    return v;
}

}  // namespace blueprint
