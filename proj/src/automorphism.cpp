#include <auslab/automorphism.hpp>

#include <stdexcept>

namespace auslab {

namespace {

int wrap(long long v, int n) {
    return static_cast<int>(((v % n) + n) % n);
}

}  // namespace

Automorphism::Automorphism(int n, int shift, bool reflection, std::vector<Scalar> xi)
    : n_(n), shift_(wrap(shift, n)), reflection_(reflection), xi_(std::move(xi)) {
    QuiverA check(n);
    if (xi_.size() != static_cast<std::size_t>(2 * n)) {
        throw std::invalid_argument("automorphism needs 2n arrow scalars");
    }
    for (const auto& s : xi_) {
        if (s.is_zero()) {
            throw ZeroScalarError("arrow scalar must be nonzero");
        }
    }
}

Automorphism Automorphism::identity(int n) {
    return Automorphism(n, 0, false, std::vector<Scalar>(static_cast<std::size_t>(2 * n), Scalar(1)));
}

Automorphism Automorphism::rotation(int n, int a) {
    return Automorphism(n, a, false, std::vector<Scalar>(static_cast<std::size_t>(2 * n), Scalar(1)));
}

Automorphism Automorphism::reflection(int n, int j) {
    return Automorphism(n, j, true, std::vector<Scalar>(static_cast<std::size_t>(2 * n), Scalar(1)));
}

Automorphism Automorphism::diagonal(int n, const std::vector<Scalar>& xi, const std::vector<Scalar>& xi_star) {
    if (xi.size() != static_cast<std::size_t>(n) || xi_star.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("diagonal automorphism needs n scalars for each arrow family");
    }
    std::vector<Scalar> all(xi);
    all.insert(all.end(), xi_star.begin(), xi_star.end());
    return Automorphism(n, 0, false, std::move(all));
}

int Automorphism::vertex_image(int v) const {
    return reflection_ ? wrap(static_cast<long long>(shift_) - v, n_) : wrap(static_cast<long long>(shift_) + v, n_);
}

std::vector<int> Automorphism::fixed_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
        if (vertex_image(v) == v) {
            out.push_back(v);
        }
    }
    return out;
}

std::pair<Scalar, Arrow> Automorphism::image(Arrow a) const {
    const QuiverA q(n_);
    const auto to = q.arrow_between(vertex_image(q.source(a)), vertex_image(q.target(a)));
    // A dihedral map preserves adjacency, so the image arrow always exists.
    return {xi(a), *to};
}

bool Automorphism::has_scalars() const {
    for (const auto& s : xi_) {
        if (!s.is_one()) {
            return true;
        }
    }
    return false;
}

bool Automorphism::is_identity() const {
    return is_dihedral_identity() && !has_scalars();
}

Automorphism Automorphism::operator*(const Automorphism& h) const {
    if (h.n_ != n_) {
        throw std::invalid_argument("composing automorphisms of different quivers");
    }
    // v -> s v + a, s = -1 for reflections
    const int sg = reflection_ ? -1 : 1;
    const int shift = wrap(static_cast<long long>(sg) * h.shift_ + shift_, n_);
    const bool refl = reflection_ != h.reflection_;
    std::vector<Scalar> xi(xi_.size());
    const QuiverA q(n_);
    for (const Arrow& b : q.arrows()) {
        auto [sh, mid] = h.image(b);
        xi[slot(b)] = this->xi(mid) * sh;
    }
    return Automorphism(n_, shift, refl, std::move(xi));
}

bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.n_ == b.n_ && a.shift_ == b.shift_ && a.reflection_ == b.reflection_ && a.xi_ == b.xi_;
}

std::string Automorphism::str() const {
    std::string out = reflection_ ? "refl(" + std::to_string(shift_) + ")" : "rot(" + std::to_string(shift_) + ")";
    if (has_scalars()) {
        out += "[";
        for (std::size_t i = 0; i < xi_.size(); ++i) {
            out += (i ? "," : "") + xi_[i].str();
        }
        out += "]";
    }
    return out;
}

std::pair<Scalar, Word> apply_word_automorphism(const QuiverA& q, const Automorphism& g, const Word& w) {
    if (g.n() != q.vertices()) {
        throw std::invalid_argument("automorphism acts on a different quiver");
    }
    word_target(q, w);
    Scalar coeff(1);
    Word out;
    out.source = g.vertex_image(w.source);
    out.arrows.reserve(w.arrows.size());
    for (const Arrow& a : w.arrows) {
        auto [s, b] = g.image(a);
        coeff *= s;
        out.arrows.push_back(b);
    }
    return {coeff, out};
}

}  // namespace auslab
