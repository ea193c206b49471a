#ifndef AUSLAB_SMASH_HPP
#define AUSLAB_SMASH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <auslab/linalg.hpp>
#include <auslab/preproj.hpp>
#include <auslab/symmetry.hpp>

namespace auslab {

class MixedDegreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class WindowTooLargeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element of R#G: NF monomial tensor group-element index.
class SmashElement {
public:
    using Key = std::pair<NFMonomial, std::size_t>;
    using Terms = std::map<Key, Scalar>;

    SmashElement() = default;
    static SmashElement term(const NFMonomial& m, std::size_t g, Scalar coeff = Scalar(1));

    void add_term(const NFMonomial& m, std::size_t g, const Scalar& coeff);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const NFMonomial& m, std::size_t g) const;
    int homogeneous_degree() const;

    SmashElement& operator+=(const SmashElement& rhs);
    SmashElement& operator-=(const SmashElement& rhs);
    SmashElement& operator*=(const Scalar& c);
    friend SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
    friend SmashElement operator-(SmashElement a, const SmashElement& b) { return a -= b; }
    friend SmashElement operator*(const Scalar& c, SmashElement a) { return a *= c; }
    friend bool operator==(const SmashElement& a, const SmashElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SmashElement& a, const SmashElement& b) { return !(a == b); }

private:
    Terms terms_;
};

/// R#G for a fixed preprojective algebra and finite group.
class SmashAlgebra {
public:
    SmashAlgebra(const Preprojective& r, const FiniteGroup& g) : r_(r), g_(g) {}

    const Preprojective& ring() const { return r_; }
    const FiniteGroup& group() const { return g_; }

    /// (r1#g1)(r2#g2) = r1 g1(r2) # g1g2
    SmashElement multiply(const SmashElement& x, const SmashElement& y) const;

    SmashElement one() const;
    /// f_G = sum_g 1#g
    SmashElement f() const;
    SmashElement embed(const AlgebraElement& x, std::size_t g = FiniteGroup::identity()) const;

    std::string to_string(const SmashElement& x) const;

private:
    const Preprojective& r_;
    const FiniteGroup& g_;
};

/// b -> a g(b) for a single term a#g.
AlgebraElement eval_auslander_map(const SmashAlgebra& s, const NFMonomial& a, std::size_t g, const AlgebraElement& b);
AlgebraElement eval_auslander_map(const SmashAlgebra& s, const SmashElement& x, const AlgebraElement& b);

/*
 * Degree-truncated two-sided ideal (f_G) in R#G.
 *
 * A term m#g lives in the block (s(m), g^{-1} t(m)); multiplication by
 * arrows on either side and by f_G never mixes blocks, so each degree keeps
 * one row-reduced basis per block.  Inside a block the identity-component
 * coordinates come last, so the rows pivoting there span J_d ∩ (R_d#1).
 */
class IdealTruncation {
public:
    IdealTruncation(const Preprojective& r, const FiniteGroup& g);

    void extend_to(int d);
    int built_through() const { return static_cast<int>(layers_.size()) - 1; }

    std::size_t dimension(int d) const;
    std::size_t smash_dimension(int d) const { return r_.dimension(d) * g_.order(); }
    /// dim (J_d ∩ R_d#1)
    std::size_t identity_intersection(int d) const;
    /// dim R'_d = dim R_d - dim (J_d ∩ R_d#1)
    std::size_t identity_component_dimension(int d) const;

    bool contains(const SmashElement& x);
    /// x reduced modulo J, as a SmashElement supported on non-pivot coordinates.
    SmashElement remainder(const SmashElement& x);

    /// Row basis of J_d as SmashElements.
    std::vector<SmashElement> basis(int d) const;

private:
    struct Layer {
        int degree = 0;
        std::vector<SparseRref<Scalar>> blocks;
        // per block: local column -> (basis index of monomial, group index)
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> coords;
        std::vector<std::size_t> identity_start;
        // (mono index * |G| + g) -> (block, local column)
        std::vector<std::pair<std::size_t, std::size_t>> where;
    };

    std::size_t block_of(const NFMonomial& m, std::size_t g) const;
    Layer make_layer(int d) const;
    void insert(Layer& layer, const SmashElement& x);
    std::vector<SparseVector<Scalar>> split(const Layer& layer, const SmashElement& x) const;

    const Preprojective& r_;
    const FiniteGroup& g_;
    SmashAlgebra smash_;
    std::vector<Layer> layers_;
};

std::vector<std::size_t> identity_component_dims(const Preprojective& r, const FiniteGroup& g, int max_degree);

enum class GrowthKind { FiniteDim, GK1, GK2Likely, Inconclusive };
std::string to_string(GrowthKind kind);

struct GrowthVerdict {
    GrowthKind kind = GrowthKind::Inconclusive;
    std::vector<std::size_t> dims;
    int window = 0;
    /// Start of the all-zero tail, -1 when the last entry is nonzero.
    int first_zero_degree = -1;
    std::size_t tail_max = 0;
    std::size_t previous_max = 0;
};

/// Windowed growth heuristic; see README for the exact rules.
GrowthVerdict growth_classify(const std::vector<std::size_t>& dims, int window,
                              std::optional<std::size_t> expected_increment = std::nullopt);

/// Window used by the verdict: half of the computed range.
int default_window(int max_degree);

struct AuslanderReport {
    int n = 0;
    int degree = 0;
    std::string group;
    std::size_t order = 0;
    GrowthVerdict growth;
    std::optional<int> pertinency;
    Verdict verdict = Verdict::Unknown;
    std::optional<Verdict> classifier;
    std::optional<bool> agree;
    std::string note;
};

AuslanderReport auslander_verdict(int n, const FiniteGroup& g, int max_degree);

/// Cutoff degree used when none is given.
int default_auslander_degree(int n, const FiniteGroup& g);

/// Non-identity element of G fixing e_0 when there is exactly one.
std::optional<std::size_t> stabilizer_reflection(const FiniteGroup& g);

struct Certificate {
    std::string name;
    SmashElement element;
    bool in_ideal = false;
};

/*
 * (p - q)#1 with p = alpha_0...alpha_{n-1}, q the pure star path at e_0,
 * together with a check of the identity (p-q)#1 = p f_1 - f_1 q where
 * f_1 = e_0#1 + e_0#r_0.
 */
struct PathDifferenceCertificate {
    Certificate membership;
    bool factorisation_holds = false;
    std::optional<std::size_t> r0;
};

PathDifferenceCertificate path_difference_certificate(const Preprojective& r, const FiniteGroup& g, IdealTruncation& ideal);

/// Pure nonstar and pure star paths whose membership the scalar-case argument produces.
std::vector<Certificate> scalar_certificates(const Preprojective& r, const FiniteGroup& g, IdealTruncation& ideal);

/// Scalar-action case: 1 (all xi equal), 2 (product of xi primitive), or nullopt.
std::optional<int> scalar_case(const FiniteGroup& g);

}  // namespace auslab

#endif
