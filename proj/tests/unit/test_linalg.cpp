#include <doctest.h>

#include <random>

#include <gmpxx.h>

#include <auslab/linalg.hpp>
#include <auslab/rational.hpp>

using namespace auslab;

namespace {

std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r != rank && a[r][c] != 0) {
                mpq_class f = a[r][c] / a[rank][c];
                for (std::size_t k = 0; k < cols; ++k) {
                    a[r][k] -= f * a[rank][k];
                }
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("sparse rref rank against dense elimination") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> keep(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 9;
        const std::size_t cols = 1 + (trial * 7) % 11;
        SparseRref<Rational> rref(cols);
        std::vector<std::vector<mpq_class>> dense;
        for (std::size_t r = 0; r < rows; ++r) {
            SparseVector<Rational> v;
            std::vector<mpq_class> row(cols);
            for (std::size_t c = 0; c < cols; ++c) {
                int x = keep(rng) == 0 ? val(rng) : 0;
                row[c] = x;
                if (x != 0) {
                    v.emplace_back(c, Rational(x));
                }
            }
            dense.push_back(row);
            rref.insert(v);
        }
        CHECK(rref.rank() == dense_rank(dense));
        for (const auto& row : rref.rows()) {
            CHECK(rref.contains(row));
        }
    }
}

TEST_CASE("reduce lands on non-pivot columns") {
    SparseRref<Rational> rref(3);
    rref.insert({{0, Rational(1)}, {2, Rational(1)}});
    auto r = rref.reduce({{0, Rational(2)}});
    REQUIRE(r.size() == 1);
    CHECK(r[0].first == 2);
    CHECK(r[0].second == Rational(-2));
    CHECK(rref.pivots_at_or_after(1) == 0);
}
