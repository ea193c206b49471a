#ifndef AUSLAB_RATIONAL_HPP
#define AUSLAB_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace auslab {

/*
 * Exact rational number.
 *
 * Values whose numerator and denominator fit in a signed 64-bit word are
 * kept inline and handled with 128-bit intermediates; anything larger is
 * promoted to a GMP rational and demoted again as soon as it fits.  Row
 * reduction over the quiver algebras keeps almost every entry small, so
 * the inline path carries nearly all of the work.
 *
 * Invariant (inline form): den_ > 0, gcd(|num_|, den_) == 1, and neither
 * word equals INT64_MIN, so negation never overflows.
 */
class Rational {
public:
    Rational() = default;
    Rational(long long value);  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !big_; }

    mpq_class to_mpq() const;

    /// Canonical text: "p" for integers, "p/q" otherwise.
    std::string str() const;
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;

    void assign_big(mpq_class q);
    bool set_small(__int128 num, __int128 den);
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace auslab

#endif
