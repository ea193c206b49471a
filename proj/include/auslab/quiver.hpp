#ifndef AUSLAB_QUIVER_HPP
#define AUSLAB_QUIVER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace auslab {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Arrow of the doubled cyclic quiver: alpha_index (index -> index+1) or
/// its star (index+1 -> index).
struct Arrow {
    int index = 0;
    bool starred = false;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/*
 * Double of the cyclic quiver on n >= 3 vertices.  Vertices are residues
 * 0..n-1; every ordered pair of vertices carries at most one arrow, which
 * is what makes graded automorphisms determined by their vertex action up
 * to scalars.
 */
class QuiverA {
public:
    explicit QuiverA(int n);

    int vertices() const { return n_; }
    int wrap(long long v) const { return static_cast<int>(((v % n_) + n_) % n_); }

    int source(Arrow a) const { return a.starred ? wrap(a.index + 1) : a.index; }
    int target(Arrow a) const { return a.starred ? a.index : wrap(a.index + 1); }

    /// The unique arrow u -> w, if any.
    std::optional<Arrow> arrow_between(int u, int w) const;

    /// The two arrows leaving v: alpha_v first, then alpha_{v-1}^*.
    std::pair<Arrow, Arrow> arrows_from(int v) const;
    /// All 2n arrows: alpha_0..alpha_{n-1}, then alpha_0^*..alpha_{n-1}^*.
    std::vector<Arrow> arrows() const;

    IntMatrix adjacency() const;

    std::string arrow_name(Arrow a) const;

private:
    int n_;
};

/// A path, read left to right: arrows[0] leaves `source`.
struct Word {
    int source = 0;
    std::vector<Arrow> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    friend bool operator==(const Word&, const Word&) = default;
};

class NotComposableError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Target vertex; throws NotComposableError if the arrows do not chain.
int word_target(const QuiverA& q, const Word& w);
bool is_composable(const QuiverA& q, const Word& w);

/// Concatenation, or nullopt (the zero product) if target(w1) != source(w2).
std::optional<Word> compose(const QuiverA& q, const Word& w1, const Word& w2);

/// Every composable word of length d, sources ascending, then lexicographic
/// with alpha before alpha^* at each step.
std::vector<Word> free_basis(const QuiverA& q, int d);

/*
 * Words of length d from a fixed source are in bijection with d-bit masks
 * (bit d-1-t set iff step t is a star arrow).  code = source * 2^d + mask
 * enumerates free_basis(q, d) in order.
 */
std::uint64_t word_code(const QuiverA& q, const Word& w);
Word word_from_code(const QuiverA& q, int d, std::uint64_t code);

std::string to_string(const QuiverA& q, const Word& w);

IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int n);

}  // namespace auslab

#endif
