#ifndef AUSLAB_AUTOMORPHISM_HPP
#define AUSLAB_AUTOMORPHISM_HPP

#include <string>
#include <utility>
#include <vector>

#include <auslab/quiver.hpp>
#include <auslab/scalars.hpp>

namespace auslab {

/*
 * Graded automorphism of the doubled cyclic quiver algebra: a dihedral
 * vertex map v -> a + v (rotation) or v -> a - v (reflection), together
 * with a nonzero scalar per arrow.  An arrow u -> w is sent to xi(arrow)
 * times the unique arrow image(u) -> image(w).
 *
 * xi is indexed by arrow.index for alpha_i and n + arrow.index for alpha_i^*.
 */
class Automorphism {
public:
    Automorphism(int n, int shift, bool reflection, std::vector<Scalar> xi);

    static Automorphism identity(int n);
    /// rho^a
    static Automorphism rotation(int n, int a);
    /// rho^j r, where r(e_i) = e_{-i}
    static Automorphism reflection(int n, int j);
    /// Vertex-fixing map alpha_i -> xi[i] alpha_i, alpha_i^* -> xi_star[i] alpha_i^*.
    static Automorphism diagonal(int n, const std::vector<Scalar>& xi, const std::vector<Scalar>& xi_star);

    int n() const { return n_; }
    int shift() const { return shift_; }
    bool reflection() const { return reflection_; }
    const std::vector<Scalar>& xi() const { return xi_; }
    const Scalar& xi(Arrow a) const { return xi_[slot(a)]; }

    int vertex_image(int v) const;
    std::vector<int> fixed_vertices() const;

    /// Image of an arrow: (scalar, arrow).
    std::pair<Scalar, Arrow> image(Arrow a) const;

    bool has_scalars() const;
    bool is_identity() const;
    bool is_dihedral_identity() const { return shift_ == 0 && !reflection_; }

    /// Composite "this after h": (g * h)(x) = g(h(x)).
    Automorphism operator*(const Automorphism& h) const;

    friend bool operator==(const Automorphism& a, const Automorphism& b);

    std::string str() const;

private:
    std::size_t slot(Arrow a) const { return static_cast<std::size_t>(a.index + (a.starred ? n_ : 0)); }

    int n_;
    int shift_;
    bool reflection_;
    std::vector<Scalar> xi_;
};

/// Arrow-by-arrow image of a word with the product of the arrow scalars.
std::pair<Scalar, Word> apply_word_automorphism(const QuiverA& q, const Automorphism& g, const Word& w);

}  // namespace auslab

#endif
