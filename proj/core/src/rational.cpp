#include "caproute/rational.hpp"

#include <charconv>
#include <numeric>

#include "caproute/errors.hpp"

namespace caproute {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidParameterError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::int64_t Rational::ceil() const {
    if (num_ >= 0) return (num_ + den_ - 1) / den_;
    return num_ / den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiply in 128 bits; operands stay far below the 64-bit range.
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad integer in rational: '" + std::string(s) + "'");
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
        Rational r(parse_int(text.substr(0, slash)), den);
        if (r.num() < 0) throw ParseError("negative density value: " + std::string(text));
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15)
            throw ParseError("bad decimal in rational: '" + std::string(text) + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        bool neg = !whole.empty() && whole.front() == '-';
        std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
        std::int64_t f = parse_int(frac);
        if (f < 0) throw ParseError("bad decimal in rational: '" + std::string(text) + "'");
        std::int64_t num = (neg ? -1 : 1) * ((w < 0 ? -w : w) * den + f);
        if (num < 0) throw ParseError("negative density value: " + std::string(text));
        return Rational(num, den);
    }
    std::int64_t v = parse_int(text);
    if (v < 0) throw ParseError("negative density value: " + std::string(text));
    return Rational(v);
}

}  // namespace caproute
