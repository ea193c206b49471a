#include <auslab/quiver.hpp>

namespace auslab {

QuiverA::QuiverA(int n) : n_(n) {
    if (n < 3) {
        throw std::invalid_argument("cyclic quiver needs n >= 3 vertices (the double of n <= 2 is not schurian), got " +
                                    std::to_string(n));
    }
}

std::optional<Arrow> QuiverA::arrow_between(int u, int w) const {
    u = wrap(u);
    w = wrap(w);
    if (w == wrap(u + 1)) {
        return Arrow{u, false};
    }
    if (u == wrap(w + 1)) {
        return Arrow{w, true};
    }
    return std::nullopt;
}

std::pair<Arrow, Arrow> QuiverA::arrows_from(int v) const {
    v = wrap(v);
    return {Arrow{v, false}, Arrow{wrap(v - 1), true}};
}

std::vector<Arrow> QuiverA::arrows() const {
    std::vector<Arrow> out;
    for (int starred = 0; starred < 2; ++starred) {
        for (int i = 0; i < n_; ++i) {
            out.push_back(Arrow{i, starred == 1});
        }
    }
    return out;
}

IntMatrix QuiverA::adjacency() const {
    IntMatrix m(static_cast<std::size_t>(n_), std::vector<std::int64_t>(static_cast<std::size_t>(n_), 0));
    for (const Arrow& a : arrows()) {
        ++m[static_cast<std::size_t>(source(a))][static_cast<std::size_t>(target(a))];
    }
    return m;
}

std::string QuiverA::arrow_name(Arrow a) const {
    return "a" + std::to_string(a.index) + (a.starred ? "*" : "");
}

int word_target(const QuiverA& q, const Word& w) {
    int at = q.wrap(w.source);
    for (const Arrow& a : w.arrows) {
        if (q.source(a) != at) {
            throw NotComposableError("word is not composable at arrow " + q.arrow_name(a));
        }
        at = q.target(a);
    }
    return at;
}

bool is_composable(const QuiverA& q, const Word& w) {
    int at = q.wrap(w.source);
    for (const Arrow& a : w.arrows) {
        if (q.source(a) != at) {
            return false;
        }
        at = q.target(a);
    }
    return true;
}

std::optional<Word> compose(const QuiverA& q, const Word& w1, const Word& w2) {
    if (word_target(q, w1) != q.wrap(w2.source)) {
        return std::nullopt;
    }
    word_target(q, w2);
    Word out = w1;
    out.arrows.insert(out.arrows.end(), w2.arrows.begin(), w2.arrows.end());
    return out;
}

std::vector<Word> free_basis(const QuiverA& q, int d) {
    if (d < 0) {
        throw std::invalid_argument("negative degree");
    }
    if (d > 40) {
        throw std::invalid_argument("free basis degree too large");
    }
    std::vector<Word> out;
    const std::uint64_t per_source = std::uint64_t{1} << d;
    out.reserve(static_cast<std::size_t>(per_source) * static_cast<std::size_t>(q.vertices()));
    for (std::uint64_t code = 0; code < per_source * static_cast<std::uint64_t>(q.vertices()); ++code) {
        out.push_back(word_from_code(q, d, code));
    }
    return out;
}

std::uint64_t word_code(const QuiverA& q, const Word& w) {
    int at = q.wrap(w.source);
    std::uint64_t mask = 0;
    for (const Arrow& a : w.arrows) {
        if (q.source(a) != at) {
            throw NotComposableError("word is not composable at arrow " + q.arrow_name(a));
        }
        mask = (mask << 1) | (a.starred ? 1u : 0u);
        at = q.target(a);
    }
    return (static_cast<std::uint64_t>(q.wrap(w.source)) << w.length()) | mask;
}

Word word_from_code(const QuiverA& q, int d, std::uint64_t code) {
    Word w;
    w.source = static_cast<int>(code >> d);
    int at = w.source;
    w.arrows.reserve(static_cast<std::size_t>(d));
    for (int t = d - 1; t >= 0; --t) {
        const auto [forward, back] = q.arrows_from(at);
        const Arrow a = ((code >> t) & 1u) ? back : forward;
        w.arrows.push_back(a);
        at = q.target(a);
    }
    return w;
}

std::string to_string(const QuiverA& q, const Word& w) {
    if (w.arrows.empty()) {
        return "e" + std::to_string(q.wrap(w.source));
    }
    std::string out;
    for (const Arrow& a : w.arrows) {
        out += q.arrow_name(a);
    }
    return out;
}

IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    IntMatrix out(n, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

IntMatrix identity_matrix(int n) {
    IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i][i] = 1;
    }
    return m;
}

}  // namespace auslab
