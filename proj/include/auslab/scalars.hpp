#ifndef AUSLAB_SCALARS_HPP
#define AUSLAB_SCALARS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include <auslab/rational.hpp>

namespace auslab {

/// Raised by operations that need a nonzero scalar.
class ZeroScalarError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/*
 * The cyclotomic field Q(z) with z a primitive m-th root of unity, realised
 * as Q[x]/(Phi_m).  Contexts are interned: get(m) always returns the same
 * object, so scalars carry a plain pointer and compare contexts by address.
 * m = 1 is the rational field.
 */
class CyclotomicField {
public:
    static const CyclotomicField& get(int m);
    static const CyclotomicField& rationals() { return get(1); }

    int conductor() const { return m_; }
    /// phi(m), the dimension over Q.
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    /// Integer coefficients of Phi_m, constant term first; monic.
    const std::vector<long long>& modulus() const { return phi_; }

    CyclotomicField(const CyclotomicField&) = delete;
    CyclotomicField& operator=(const CyclotomicField&) = delete;

private:
    explicit CyclotomicField(int m);
    int m_;
    std::vector<long long> phi_;
};

/// Cyclotomic polynomial Phi_m by exact division of x^m - 1.
std::vector<long long> cyclotomic_polynomial(int m);

/*
 * Exact element of Q(zeta_m): a residue modulo Phi_m with degree < phi(m).
 * Immutable in practice; all arithmetic returns canonical residues.  Mixing
 * an element of Q (m = 1) with one of Q(zeta_m) embeds the rational one;
 * mixing two different nontrivial conductors is an error.
 */
class Scalar {
public:
    using Coeffs = boost::container::small_vector<Rational, 2>;

    Scalar() : Scalar(CyclotomicField::rationals(), Rational(0)) {}
    Scalar(const CyclotomicField& field, Rational value);
    Scalar(const CyclotomicField& field, std::vector<Rational> coeffs);
    Scalar(long long value) : Scalar(CyclotomicField::rationals(), Rational(value)) {}  // NOLINT
    Scalar(Rational value) : Scalar(CyclotomicField::rationals(), std::move(value)) {}  // NOLINT

    const CyclotomicField& field() const { return *field_; }
    const Coeffs& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q (all coefficients above the constant vanish).
    bool is_rational() const;
    /// The rational value; throws when !is_rational().
    const Rational& rational() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long long e) const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Re-expresses the value in a field containing this one.
    Scalar embed(const CyclotomicField& target) const;

    /// Exact text, e.g. "-1", "1/2", "z", "1 - 2*z^3" with z = zeta_m.
    std::string str() const;

private:
    const CyclotomicField* field_;
    Coeffs c_;

    void unify(Scalar& other_copy);
};

/// zeta_m^e as a canonical residue.
Scalar make_root_of_unity(const CyclotomicField& field, long long e);

/// Least e >= 1 with a^e = 1, or nullopt when no root of unity of Q(zeta_m)
/// matches.  Throws ZeroScalarError for a = 0.
std::optional<int> multiplicative_order(const Scalar& a);

}  // namespace auslab

#endif
