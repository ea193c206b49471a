#include <doctest.h>

#include <numeric>

#include <auslab/symmetry.hpp>

using namespace auslab;

namespace {

std::vector<Scalar> all(int n, Scalar s) { return std::vector<Scalar>(static_cast<std::size_t>(n), s); }

// Every subset of D_n that contains the identity and is closed under composition.
int brute_force_subgroups(int n) {
    const FiniteGroup d = dihedral_group(n);
    const std::size_t N = d.order();
    int count = 0;
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        if (!(mask & 1u)) {
            continue;
        }
        bool closed = true;
        for (std::size_t a = 0; a < N && closed; ++a) {
            for (std::size_t b = 0; b < N && closed; ++b) {
                if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> d.product(a, b) & 1u)) {
                    closed = false;
                }
            }
        }
        count += closed;
    }
    return count;
}

int divisor_count_plus_sum(int n) {
    int tau = 0, sigma = 0;
    for (int k = 1; k <= n; ++k) {
        if (n % k == 0) {
            ++tau;
            sigma += k;
        }
    }
    return tau + sigma;
}

}  // namespace

TEST_CASE("arrow images") {
    const int n = 5;
    QuiverA q(n);
    Word a0{0, {Arrow{0, false}}};
    auto [c1, w1] = apply_word_automorphism(q, Automorphism::rotation(n, 1), a0);
    CHECK(c1 == Scalar(1));
    CHECK(w1 == Word{1, {Arrow{1, false}}});
    auto [c2, w2] = apply_word_automorphism(q, Automorphism::reflection(n, 0), a0);
    CHECK(c2 == Scalar(1));
    CHECK(w2 == Word{0, {Arrow{n - 1, true}}});
    auto sigma = Automorphism::diagonal(3, all(3, Scalar(-1)), all(3, Scalar(1)));
    auto [c3, w3] = apply_word_automorphism(QuiverA(3), sigma, a0);
    CHECK(c3 == Scalar(-1));
    CHECK(w3 == a0);
}

TEST_CASE("validate") {
    auto v1 = validate(Automorphism::rotation(3, 1));
    CHECK(v1.kind == AutomorphismKind::StarPreserving);
    CHECK(v1.omega == Scalar(1));
    auto v2 = validate(Automorphism::reflection(3, 0));
    CHECK(v2.kind == AutomorphismKind::StarInverting);
    CHECK(v2.omega == Scalar(-1));
    auto v3 = validate(Automorphism::diagonal(3, all(3, Scalar(-1)), all(3, Scalar(-1))));
    CHECK(v3.kind == AutomorphismKind::ScalarDiag);
    CHECK(v3.omega == Scalar(1));

    std::vector<Scalar> xi = all(3, Scalar(1));
    xi[0] = Scalar(2);
    CHECK_THROWS_AS(validate(Automorphism::diagonal(3, xi, all(3, Scalar(1)))), NotAnAutomorphismError);
}

TEST_CASE("action on monomials") {
    Preprojective r3(3);
    CHECK(apply(r3, Automorphism::rotation(3, 1), NFMonomial{0, 1, 0}).second == NFMonomial{1, 1, 0});
    CHECK(apply(r3, Automorphism::reflection(3, 0), NFMonomial{0, 1, 0}).second == NFMonomial{0, 0, 1});
    Preprojective r4(4);
    auto [c, m] = apply(r4, Automorphism::reflection(4, 0), NFMonomial{1, 2, 1});
    CHECK(m == NFMonomial{3, 1, 2});
    CHECK(c == Scalar(1));
}

TEST_CASE("closed-form action agrees with the word-level action") {
    for (int n : {3, 4}) {
        Preprojective r(n);
        std::vector<Automorphism> maps = dihedral_group(n).elements();
        maps.push_back(Automorphism::diagonal(n, all(n, Scalar(-1)), all(n, Scalar(-1))));
        std::vector<Scalar> xi = all(n, Scalar(1));
        xi[n - 1] = Scalar(-1);
        maps.push_back(Automorphism::diagonal(n, xi, xi));
        for (const auto& g : maps) {
            for (int d = 0; d <= 6; ++d) {
                for (const auto& m : r.basis(d)) {
                    auto [c, w] = apply_word_automorphism(r.quiver(), g, r.representative(m));
                    auto [c2, m2] = apply(r, g, m);
                    CHECK(c2 == c);
                    CHECK(m2 == normal_form(r.quiver(), w));
                }
            }
        }
    }
}

TEST_CASE("group generation") {
    CHECK(generate_group(3, {Automorphism::rotation(3, 1)}).order() == 3);
    CHECK(generate_group(3, {Automorphism::rotation(3, 1), Automorphism::reflection(3, 0)}).order() == 6);
    CHECK(vertex_reflection_group(4).order() == 4);
    CHECK(vertex_reflection_group(3).order() == 6);
    CHECK_THROWS_AS(generate_group(3, {Automorphism::diagonal(3, all(3, Scalar(2)), all(3, Scalar(2)))}, 50),
                    CapExceededError);

    const FiniteGroup d = dihedral_group(5);
    for (std::size_t a = 0; a < d.order(); ++a) {
        CHECK(d.product(a, d.inverse(a)) == FiniteGroup::identity());
        for (std::size_t b = 0; b < d.order(); ++b) {
            CHECK(d[d.product(a, b)] == d[a] * d[b]);
        }
    }
}

TEST_CASE("subgroup enumeration") {
    CHECK(enumerate_subgroups(3).size() == 6);
    CHECK(enumerate_subgroups(4).size() == 10);
    for (int n = 3; n <= 8; ++n) {
        const auto subs = enumerate_subgroups(n);
        CHECK(static_cast<int>(subs.size()) == divisor_count_plus_sum(n));
        if (n <= 6) {
            CHECK(static_cast<int>(subs.size()) == brute_force_subgroups(n));
        }
    }
    int no_reflection = 0;
    for (const auto& s : enumerate_subgroups(3)) {
        bool has = false;
        for (const auto& g : s.group.elements()) {
            has = has || g.reflection();
        }
        no_reflection += !has;
    }
    CHECK(no_reflection == 2);
}

TEST_CASE("closed-form classifier") {
    CHECK(classify_auslander(3, generate_group(3, {Automorphism::rotation(3, 1)})) == Verdict::Iso);
    CHECK(classify_auslander(4, vertex_reflection_group(4)) == Verdict::NotIso);
    CHECK(classify_auslander(4, generate_group(4, {Automorphism::rotation(4, 2), Automorphism::reflection(4, 1)})) ==
          Verdict::Iso);
    CHECK(classify_auslander(5, dihedral_group(5)) == Verdict::NotIso);
    auto sigma = generate_group(3, {Automorphism::diagonal(3, all(3, Scalar(-1)), all(3, Scalar(-1)))});
    CHECK_THROWS_AS(classify_auslander(3, sigma), ScalarGroupNotClassifiable);
    for (int n = 3; n <= 6; ++n) {
        for (const auto& s : enumerate_subgroups(n)) {
            CHECK(describe(s.group).label() == s.descriptor.label());
            CHECK((classify_auslander(n, s.group) == Verdict::NotIso) ==
                  contains_all_vertex_fixing_reflections(s.group));
        }
    }
}
