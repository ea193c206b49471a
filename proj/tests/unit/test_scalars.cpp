#include <doctest.h>

#include <numeric>
#include <random>

#include <gmpxx.h>

#include <auslab/rational.hpp>
#include <auslab/scalars.hpp>

using namespace auslab;

namespace {

int mobius(int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    return m > 1 ? -result : result;
}

int euler_phi(int m) {
    int count = 0;
    for (int k = 1; k <= m; ++k) {
        count += std::gcd(k, m) == 1;
    }
    return count;
}

}  // namespace

TEST_CASE("rational arithmetic matches gmp") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> small(-50, 50);
    std::uniform_int_distribution<long long> huge(-(1LL << 62), 1LL << 62);
    for (int trial = 0; trial < 2000; ++trial) {
        auto draw = [&] { return trial % 3 == 0 ? huge(rng) : small(rng); };
        long long an = draw(), ad = draw(), bn = draw(), bd = draw();
        if (ad == 0 || bd == 0) {
            continue;
        }
        Rational a(an, ad), b(bn, bd);
        mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
        mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
        qa.canonicalize();
        qb.canonicalize();
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (bn != 0) {
            CHECK((a / b).to_mpq() == qa / qb);
        }
        CHECK((a < b) == (qa < qb));
    }
}

TEST_CASE("rational promotion and demotion") {
    Rational big(1LL << 62);
    Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    Rational back = sq / big;
    CHECK(back.is_small());
    CHECK(back == big);
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational::parse(sq.str()) == sq);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    for (int m = 1; m <= 40; ++m) {
        CHECK(CyclotomicField::get(m).degree() == euler_phi(m));
    }
    CHECK(&CyclotomicField::get(5) == &CyclotomicField::get(5));
}

TEST_CASE("roots of unity") {
    CHECK(make_root_of_unity(CyclotomicField::get(1), 0) == Scalar(1));
    CHECK(make_root_of_unity(CyclotomicField::get(2), 1) == Scalar(-1));
    CHECK(make_root_of_unity(CyclotomicField::get(4), 2) == Scalar(-1));
    for (int m = 1; m <= 24; ++m) {
        const auto& f = CyclotomicField::get(m);
        const Scalar z = make_root_of_unity(f, 1);
        CHECK(z.pow(m) == Scalar(1));
        CHECK(multiplicative_order(z) == m);
        // sum of the primitive m-th roots is mu(m)
        Scalar sum(f, Rational(0));
        for (int k = 1; k <= m; ++k) {
            if (std::gcd(k, m) == 1) {
                sum += make_root_of_unity(f, k);
            }
        }
        CHECK(sum == Scalar(mobius(m)));
        CHECK(make_root_of_unity(f, -1) * z == Scalar(1));
    }
}

TEST_CASE("scalar arithmetic") {
    const auto& q4 = CyclotomicField::get(4);
    const Scalar i = make_root_of_unity(q4, 1);
    CHECK(Scalar(1) + Scalar(1) == Scalar(2));
    CHECK(i * i == Scalar(-1));
    CHECK(Scalar(-1).inverse() == Scalar(-1));
    CHECK(multiplicative_order(Scalar(1)) == 1);
    CHECK(multiplicative_order(Scalar(-1)) == 2);
    CHECK(multiplicative_order(i) == 4);
    CHECK_FALSE(multiplicative_order(Scalar(2)).has_value());
    CHECK_THROWS_AS(Scalar(0).inverse(), ZeroScalarError);
    CHECK_THROWS_AS(multiplicative_order(Scalar(0)), ZeroScalarError);

    // embedding Q -> Q(zeta_m) commutes with arithmetic
    const auto& q7 = CyclotomicField::get(7);
    Rational a(3, 5), b(-2, 7);
    CHECK(Scalar(a + b).embed(q7) == Scalar(a).embed(q7) + Scalar(b).embed(q7));
    CHECK(Scalar(a * b).embed(q7) == Scalar(a).embed(q7) * Scalar(b).embed(q7));
    CHECK(Scalar(a).inverse().embed(q7) == Scalar(a).embed(q7).inverse());
    CHECK((Scalar(a) * make_root_of_unity(q7, 2)).field().conductor() == 7);
}

TEST_CASE("inverse in a cyclotomic field") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int m : {3, 5, 8, 12, 15}) {
        const auto& f = CyclotomicField::get(m);
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> c;
            for (int k = 0; k < f.degree(); ++k) {
                c.emplace_back(coef(rng));
            }
            Scalar x(f, c);
            if (x.is_zero()) {
                continue;
            }
            CHECK(x * x.inverse() == Scalar(1));
        }
    }
}
