#include <auslab/scalars.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace auslab {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

// Remainder of a modulo a monic integer polynomial.
void reduce_mod(Poly& a, const std::vector<long long>& modulus) {
    const std::size_t deg = modulus.size() - 1;
    for (std::size_t top = a.size(); top-- > deg;) {
        if (a[top].is_zero()) {
            continue;
        }
        const Rational lead = a[top];
        const std::size_t shift = top - deg;
        for (std::size_t i = 0; i < deg; ++i) {
            if (modulus[i] != 0) {
                a[shift + i] -= lead * Rational(modulus[i]);
            }
        }
        a[top] = Rational(0);
    }
    a.resize(deg);
}

// Division with remainder in Q[x]; b must be nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) {
        return {Poly{}, a};
    }
    Poly q(a.size() - b.size() + 1);
    const Rational lead_inv = b.back().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
        const std::size_t top = k + b.size() - 1;
        if (a[top].is_zero()) {
            continue;
        }
        const Rational f = a[top] * lead_inv;
        q[k] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[k + i] -= f * b[i];
        }
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_zero()) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
    }
    trim(r);
    return r;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
    if (m < 1) {
        throw std::invalid_argument("cyclotomic conductor must be positive");
    }
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    std::vector<long long> num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) {
            continue;
        }
        const auto den = cyclotomic_polynomial(d);
        const std::size_t dd = den.size() - 1;
        std::vector<long long> q(num.size() - dd, 0);
        for (std::size_t top = num.size(); top-- > dd;) {
            const long long f = num[top];  // den is monic
            q[top - dd] = f;
            for (std::size_t i = 0; i <= dd; ++i) {
                num[top - dd + i] -= f * den[i];
            }
        }
        num = std::move(q);
    }
    return num;
}

CyclotomicField::CyclotomicField(int m) : m_(m), phi_(cyclotomic_polynomial(m)) {}

const CyclotomicField& CyclotomicField::get(int m) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> registry;
    if (m < 1) {
        throw std::invalid_argument("cyclotomic conductor must be positive");
    }
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = registry[m];
    if (!slot) {
        slot.reset(new CyclotomicField(m));
    }
    return *slot;
}

Scalar::Scalar(const CyclotomicField& field, Rational value) : field_(&field) {
    c_.resize(static_cast<std::size_t>(field.degree()));
    c_[0] = std::move(value);
}

Scalar::Scalar(const CyclotomicField& field, std::vector<Rational> coeffs) : field_(&field) {
    reduce_mod(coeffs, field.modulus());
    c_.assign(std::make_move_iterator(coeffs.begin()), std::make_move_iterator(coeffs.end()));
}

bool Scalar::is_zero() const {
    for (const auto& c : c_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

bool Scalar::is_one() const {
    return is_rational() && c_[0].is_one();
}

const Rational& Scalar::rational() const {
    if (!is_rational()) {
        throw std::domain_error("scalar " + str() + " is not rational");
    }
    return c_[0];
}

Scalar Scalar::embed(const CyclotomicField& target) const {
    if (&target == field_) {
        return *this;
    }
    if (field_->conductor() == 1) {
        return Scalar(target, c_[0]);
    }
    if (target.conductor() % field_->conductor() != 0) {
        throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(field_->conductor()) + ") into Q(zeta_" +
                                    std::to_string(target.conductor()) + ")");
    }
    // zeta_m = zeta_M^(M/m)
    const int step = target.conductor() / field_->conductor();
    std::vector<Rational> poly(static_cast<std::size_t>(step) * c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        poly[i * static_cast<std::size_t>(step)] = c_[i];
    }
    return Scalar(target, std::move(poly));
}

void Scalar::unify(Scalar& other) {
    if (other.field_ == field_) {
        return;
    }
    if (field_->conductor() == 1) {
        *this = embed(*other.field_);
    } else if (other.field_->conductor() == 1) {
        other = other.embed(*field_);
    } else {
        throw std::invalid_argument("scalars from different cyclotomic fields");
    }
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (rhs.field_ == field_) {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += rhs.c_[i];
        }
        return *this;
    }
    Scalar r(rhs);
    unify(r);
    return *this += r;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (rhs.field_ == field_) {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] -= rhs.c_[i];
        }
        return *this;
    }
    Scalar r(rhs);
    unify(r);
    return *this -= r;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (rhs.field_ != field_) {
        if (rhs.field_->conductor() == 1) {
            for (auto& c : c_) {
                c *= rhs.c_[0];
            }
            return *this;
        }
        Scalar r(rhs);
        unify(r);
        return *this *= r;
    }
    if (c_.size() == 1) {
        c_[0] *= rhs.c_[0];
        return *this;
    }
    Poly a(c_.begin(), c_.end());
    Poly b(rhs.c_.begin(), rhs.c_.end());
    Poly p = poly_mul(a, b);
    p.resize(std::max(p.size(), c_.size()));
    reduce_mod(p, field_->modulus());
    c_.assign(std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw ZeroScalarError("inverse of zero scalar");
    }
    if (c_.size() == 1) {
        return Scalar(*field_, c_[0].inverse());
    }
    // Extended Euclid: s*a + t*phi = g, g a nonzero constant since phi is irreducible.
    Poly phi;
    for (long long v : field_->modulus()) {
        phi.emplace_back(v);
    }
    Poly r0 = phi;
    Poly r1(c_.begin(), c_.end());
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant
    const Rational g_inv = r1[0].inverse();
    for (auto& c : s1) {
        c *= g_inv;
    }
    s1.resize(std::max(s1.size(), c_.size()));
    return Scalar(*field_, std::move(s1));
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Scalar result(*field_, Rational(1));
    Scalar base(*this);
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ == b.field_) {
        return std::equal(a.c_.begin(), a.c_.end(), b.c_.begin());
    }
    if (a.field_->conductor() == 1 || b.field_->conductor() == 1) {
        const Scalar& big = a.field_->conductor() == 1 ? b : a;
        const Scalar& small = a.field_->conductor() == 1 ? a : b;
        return big.is_rational() && big.c_[0] == small.c_[0];
    }
    return false;
}

std::string Scalar::str() const {
    if (is_rational()) {
        return c_[0].str();
    }
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.str();
            continue;
        }
        if (!mag.is_one()) {
            out += mag.str() + "*";
        }
        out += "z";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

Scalar make_root_of_unity(const CyclotomicField& field, long long e) {
    const long long m = field.conductor();
    const long long r = ((e % m) + m) % m;
    std::vector<Rational> poly(static_cast<std::size_t>(std::max<long long>(r + 1, field.degree())));
    poly[static_cast<std::size_t>(r)] = Rational(1);
    return Scalar(field, std::move(poly));
}

std::optional<int> multiplicative_order(const Scalar& a) {
    if (a.is_zero()) {
        throw ZeroScalarError("multiplicative order of zero");
    }
    // Q(zeta_m) holds exactly lcm(2, m) roots of unity.
    const int m = a.field().conductor();
    const int bound = std::lcm(2, m);
    Scalar power = a;
    for (int e = 1; e <= bound; ++e) {
        if (power.is_one()) {
            return e;
        }
        power *= a;
    }
    return std::nullopt;
}

}  // namespace auslab
