#include <auslab/rational.hpp>

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace auslab {

namespace {

constexpr __int128 kSmallMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t magnitude(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
}

std::uint64_t magnitude_mod(__int128 v, std::uint64_t m) {
    unsigned __int128 a = v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    return static_cast<std::uint64_t>(a % m);
}

bool fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && mpz_cmp_si(z.get_mpz_t(), std::numeric_limits<long>::min()) != 0;
}

}  // namespace

Rational::Rational(long long value) {
    if (value == std::numeric_limits<long long>::min()) {
        assign_big(mpq_class(mpz_class(static_cast<long>(value))));
    } else {
        num_ = value;
    }
}

Rational::Rational(long long num, long long den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    assign_big(std::move(q));
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::assign_big(mpq_class q) {
    if (fits_small(q.get_num()) && fits_small(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

bool Rational::set_small(__int128 num, __int128 den) {
    if (num > kSmallMax || num < -kSmallMax || den > kSmallMax) {
        return false;
    }
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return true;
}

bool Rational::is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) {
        return *big_;
    }
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            cleaned.push_back(c);
        }
    }
    auto valid_int = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                return false;
            }
        }
        return true;
    };
    auto slash = cleaned.find('/');
    std::string num = cleaned.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : cleaned.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    return Rational(mpq_class(n, d));
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_big(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    Rational r;
    if (big_) {
        r.assign_big(1 / *big_);
    } else {
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (rhs.num_ == 0) {
            return *this;
        }
        if (den_ == 1 && rhs.den_ == 1) {
            if (set_small(static_cast<__int128>(num_) + rhs.num_, 1)) {
                return *this;
            }
        } else {
            const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(rhs.den_));
            const auto da = static_cast<std::int64_t>(den_ / static_cast<std::int64_t>(g));
            const auto db = static_cast<std::int64_t>(rhs.den_ / static_cast<std::int64_t>(g));
            const __int128 t = static_cast<__int128>(num_) * db + static_cast<__int128>(rhs.num_) * da;
            if (t == 0) {
                num_ = 0;
                den_ = 1;
                return *this;
            }
            const std::uint64_t g2 = std::gcd(magnitude_mod(t, g), g);
            if (set_small(t / static_cast<__int128>(g2),
                          static_cast<__int128>(da) * (rhs.den_ / static_cast<std::int64_t>(g2)))) {
                return *this;
            }
        }
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        const auto g1 = static_cast<std::int64_t>(std::gcd(magnitude(num_), static_cast<std::uint64_t>(rhs.den_)));
        const auto g2 = static_cast<std::int64_t>(std::gcd(magnitude(rhs.num_), static_cast<std::uint64_t>(den_)));
        const __int128 n = static_cast<__int128>(num_ / g1) * (rhs.num_ / g2);
        const __int128 d = static_cast<__int128>(den_ / g2) * (rhs.den_ / g1);
        if (set_small(n, d)) {
            return *this;
        }
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    return *this *= rhs.inverse();
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    return a.to_mpq() == b.to_mpq();
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

}  // namespace auslab
