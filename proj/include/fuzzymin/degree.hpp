#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fuzzymin {

/// A truth value in [0,1], held as an exact rational.
///
/// Finite chains embed their k-th element as k/(N-1), so one value type
/// serves every algebra and ordering never goes through floating point.
class Degree {
public:
    Degree() = default;

    static Degree zero() { return Degree(); }
    static Degree one() { return Degree(mpq_class(1)); }

    /// p/q, normalized. Throws UsageError unless 0 <= p/q <= 1.
    static Degree fraction(std::int64_t numerator, std::int64_t denominator);
    static Degree from_rational(mpq_class value);

    /// Accepts "0", "1", "0.75", "7/10", ".5". Throws ParseError otherwise.
    static Degree parse(std::string_view text);

    const mpq_class &value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    /// Canonical fraction: "0", "1", "3/5".
    std::string to_string() const;
    /// Exact decimal when the expansion terminates ("0.6"), otherwise the fraction.
    std::string to_decimal_string() const;

    friend bool operator==(const Degree &a, const Degree &b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Degree &a, const Degree &b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Degree(mpq_class value) : value_(std::move(value)) {}

    friend class Algebra;

    mpq_class value_{0};
};

inline const Degree &max_degree(const Degree &a, const Degree &b) { return a < b ? b : a; }
inline const Degree &min_degree(const Degree &a, const Degree &b) { return b < a ? b : a; }

} // namespace fuzzymin
