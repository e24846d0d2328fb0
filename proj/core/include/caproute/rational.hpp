#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace caproute {

// Exact rational number. Density values are ratios of small integers
// (|E|/|V|, clique counts, degrees, cut sizes), and cover boundaries and
// density indices are decided by exact comparison, so no floating point.
class Rational {
   public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Smallest integer >= value. Used to turn a real threshold into the k of
    // a k-core / k-edge-connectivity query.
    std::int64_t ceil() const;

    bool is_integer() const { return den_ == 1; }

    // "3", "3/2"
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Accepts "3", "3/2", and decimal literals like "1.5" (parsed exactly as
// 15/10 and reduced). Throws InvalidParameterError on anything else or on
// negative input.
Rational parse_rational(std::string_view text);

}  // namespace caproute
