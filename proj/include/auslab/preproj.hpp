#ifndef AUSLAB_PREPROJ_HPP
#define AUSLAB_PREPROJ_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <auslab/linalg.hpp>
#include <auslab/quiver.hpp>
#include <auslab/scalars.hpp>

namespace auslab {

/*
 * Basis monomial of the preprojective algebra: the path leaving `source`
 * along `nonstars` consecutive alpha arrows and then `stars` consecutive
 * star arrows,
 *
 *     alpha_i ... alpha_{i+l-1} alpha_{i+l-1}^* ... alpha_{i+l-k}^*.
 *
 * Every nonzero path is equal in the algebra to exactly one of these.
 */
struct NFMonomial {
    int source = 0;
    int nonstars = 0;
    int stars = 0;

    int degree() const { return nonstars + stars; }
    friend auto operator<=>(const NFMonomial&, const NFMonomial&) = default;
};

/// Finite linear combination of NF monomials.  Zero coefficients are never stored.
class AlgebraElement {
public:
    using Terms = std::map<NFMonomial, Scalar>;

    static constexpr int kMixedDegree = -1;

    AlgebraElement() = default;
    static AlgebraElement monomial(NFMonomial m, Scalar coeff = Scalar(1));

    void add_term(const NFMonomial& m, const Scalar& coeff);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const NFMonomial& m) const;

    /// Common degree of all terms, 0 for the zero element, kMixedDegree otherwise.
    int homogeneous_degree() const;

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const Scalar& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

private:
    Terms terms_;
};

/// Closed-form normal-form engine for Pi(A~) on n >= 3 vertices.
class Preprojective {
public:
    explicit Preprojective(int n) : quiver_(n) {}

    const QuiverA& quiver() const { return quiver_; }
    int n() const { return quiver_.vertices(); }

    NFMonomial canonical(NFMonomial m) const;
    int target(const NFMonomial& m) const;
    Word representative(const NFMonomial& m) const;

    /// Degree-d monomials ordered by source, then by number of nonstars.
    std::vector<NFMonomial> basis(int d) const;
    std::size_t basis_index(const NFMonomial& m) const;
    std::size_t dimension(int d) const { return static_cast<std::size_t>(n()) * static_cast<std::size_t>(d + 1); }

    std::optional<NFMonomial> multiply(const NFMonomial& a, const NFMonomial& b) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement power(const AlgebraElement& a, int e) const;

    AlgebraElement one() const;
    AlgebraElement idempotent(int i) const;
    AlgebraElement arrow(Arrow a) const;

    std::string name(const NFMonomial& m) const;
    std::string to_string(const AlgebraElement& x) const;

private:
    QuiverA quiver_;
};

/// (source, #nonstars, #stars) of a composable word.  Pushing every star
/// arrow to the right with alpha_j^* alpha_j = alpha_{j+1} alpha_{j+1}^* lands here.
NFMonomial normal_form(const QuiverA& q, const Word& w);

/*
 * Brute-force model of R_d = (kQ)_d / (Omega)_d.  Each degree keeps an RREF
 * basis of the relation ideal inside the span of all n*2^d words.  Columns
 * run in decreasing word order (degree, source, then lexicographic with
 * alpha_0 < ... < alpha_{n-1} < alpha_0^* < ...), so the leading term of a
 * relation is its largest word and the surviving "standard" words form a
 * complement basis.
 */
class RelationOracle {
public:
    explicit RelationOracle(const QuiverA& q);

    const QuiverA& quiver() const { return quiver_; }
    void extend_to(int d);
    int built_through() const { return static_cast<int>(layers_.size()) - 1; }

    std::size_t free_dimension(int d) const;
    std::size_t ideal_dimension(int d) const { return layer(d).rank(); }
    std::size_t quotient_dimension(int d) const { return free_dimension(d) - ideal_dimension(d); }

    const SparseRref<Rational>& layer(int d) const;

    std::size_t column(const Word& w) const;
    Word word_at(int d, std::size_t column) const;

    /// Coordinates of a free vector modulo the ideal, supported on standard columns.
    SparseVector<Rational> reduce(int d, const SparseVector<Rational>& v) const;
    SparseVector<Rational> reduce(const Word& w) const;

    bool is_standard(const Word& w) const;
    std::vector<Word> standard_words(int d) const;

    /// (i, j) -> number of standard words from e_i to e_j.
    IntMatrix block_dimensions(int d) const;

private:
    QuiverA quiver_;
    std::vector<SparseRref<Rational>> layers_;
};

struct HilbertReport {
    int n = 0;
    int degree = 0;
    std::vector<std::int64_t> total;
    std::vector<IntMatrix> matrix;
};

/// Total and matrix Hilbert series through degree D, read off the oracle.
HilbertReport hilbert(const QuiverA& q, int max_degree);
HilbertReport hilbert(RelationOracle& oracle, int max_degree);

/// First degree d >= 2 where C_d != M C_{d-1} - C_{d-2}, if any.
std::optional<int> first_recurrence_failure(const HilbertReport& report, const IntMatrix& adjacency);

/// Coefficients of (I - M t)^{-2} = sum (d+1) M^d t^d through degree D.
std::vector<IntMatrix> inverse_square_series(const IntMatrix& adjacency, int max_degree);

/// Default truncation degree for closed-form computations: max(4n+4, 24).
int default_truncation(int n);

}  // namespace auslab

#endif
