#include <auslab/preproj.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace auslab {

AlgebraElement AlgebraElement::monomial(NFMonomial m, Scalar coeff) {
    AlgebraElement x;
    x.add_term(m, coeff);
    return x;
}

void AlgebraElement::add_term(const NFMonomial& m, const Scalar& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Scalar AlgebraElement::coefficient(const NFMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int AlgebraElement::homogeneous_degree() const {
    if (terms_.empty()) {
        return 0;
    }
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
        if (m.degree() != d) {
            return kMixedDegree;
        }
    }
    return d;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
}

NFMonomial Preprojective::canonical(NFMonomial m) const {
    if (m.nonstars < 0 || m.stars < 0) {
        throw std::invalid_argument("negative arrow count in monomial");
    }
    m.source = quiver_.wrap(m.source);
    return m;
}

int Preprojective::target(const NFMonomial& m) const {
    return quiver_.wrap(static_cast<long long>(m.source) + m.nonstars - m.stars);
}

Word Preprojective::representative(const NFMonomial& m) const {
    Word w;
    w.source = quiver_.wrap(m.source);
    int at = w.source;
    for (int t = 0; t < m.nonstars; ++t) {
        w.arrows.push_back(Arrow{at, false});
        at = quiver_.wrap(at + 1);
    }
    for (int t = 0; t < m.stars; ++t) {
        at = quiver_.wrap(at - 1);
        w.arrows.push_back(Arrow{at, true});
    }
    return w;
}

std::vector<NFMonomial> Preprojective::basis(int d) const {
    std::vector<NFMonomial> out;
    out.reserve(dimension(d));
    for (int i = 0; i < n(); ++i) {
        for (int l = 0; l <= d; ++l) {
            out.push_back(NFMonomial{i, l, d - l});
        }
    }
    return out;
}

std::size_t Preprojective::basis_index(const NFMonomial& m) const {
    return static_cast<std::size_t>(quiver_.wrap(m.source)) * static_cast<std::size_t>(m.degree() + 1) +
           static_cast<std::size_t>(m.nonstars);
}

std::optional<NFMonomial> Preprojective::multiply(const NFMonomial& a, const NFMonomial& b) const {
    if (target(a) != quiver_.wrap(b.source)) {
        return std::nullopt;
    }
    return NFMonomial{quiver_.wrap(a.source), a.nonstars + b.nonstars, a.stars + b.stars};
}

AlgebraElement Preprojective::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (auto m = multiply(ma, mb)) {
                out.add_term(*m, ca * cb);
            }
        }
    }
    return out;
}

AlgebraElement Preprojective::power(const AlgebraElement& a, int e) const {
    if (e < 0) {
        throw std::invalid_argument("negative power");
    }
    AlgebraElement out = one();
    for (int i = 0; i < e; ++i) {
        out = multiply(out, a);
    }
    return out;
}

AlgebraElement Preprojective::one() const {
    AlgebraElement x;
    for (int i = 0; i < n(); ++i) {
        x.add_term(NFMonomial{i, 0, 0}, Scalar(1));
    }
    return x;
}

AlgebraElement Preprojective::idempotent(int i) const {
    return AlgebraElement::monomial(NFMonomial{quiver_.wrap(i), 0, 0});
}

AlgebraElement Preprojective::arrow(Arrow a) const {
    return a.starred ? AlgebraElement::monomial(NFMonomial{quiver_.source(a), 0, 1})
                     : AlgebraElement::monomial(NFMonomial{a.index, 1, 0});
}

std::string Preprojective::name(const NFMonomial& m) const {
    return "NF(" + std::to_string(quiver_.wrap(m.source)) + "," + std::to_string(m.nonstars) + "," +
           std::to_string(m.stars) + ")";
}

std::string Preprojective::to_string(const AlgebraElement& x) const {
    if (x.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : x.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (!c.is_one()) {
            out += "(" + c.str() + ")*";
        }
        out += name(m);
    }
    return out;
}

NFMonomial normal_form(const QuiverA& q, const Word& w) {
    word_target(q, w);
    NFMonomial m{q.wrap(w.source), 0, 0};
    for (const Arrow& a : w.arrows) {
        (a.starred ? m.stars : m.nonstars) += 1;
    }
    return m;
}

namespace {

constexpr int kMaxOracleDegree = 24;

std::uint64_t word_count(int n, int d) {
    return static_cast<std::uint64_t>(n) << d;
}

int code_target(const QuiverA& q, int d, std::uint64_t code) {
    const auto mask = code & ((std::uint64_t{1} << d) - 1);
    const int stars = std::popcount(mask);
    const auto source = static_cast<long long>(code >> d);
    return q.wrap(source + (d - stars) - stars);
}

}  // namespace

RelationOracle::RelationOracle(const QuiverA& q) : quiver_(q) {
    layers_.emplace_back(word_count(q.vertices(), 0));
    layers_.emplace_back(word_count(q.vertices(), 1));
}

std::size_t RelationOracle::free_dimension(int d) const {
    return word_count(quiver_.vertices(), d);
}

const SparseRref<Rational>& RelationOracle::layer(int d) const {
    if (d < 0 || d > built_through()) {
        throw std::out_of_range("relation oracle not built through degree " + std::to_string(d));
    }
    return layers_[static_cast<std::size_t>(d)];
}

std::size_t RelationOracle::column(const Word& w) const {
    const std::uint64_t total = word_count(quiver_.vertices(), w.length());
    return static_cast<std::size_t>(total - 1 - word_code(quiver_, w));
}

Word RelationOracle::word_at(int d, std::size_t column) const {
    const std::uint64_t total = word_count(quiver_.vertices(), d);
    return word_from_code(quiver_, d, total - 1 - column);
}

void RelationOracle::extend_to(int d) {
    if (d > kMaxOracleDegree) {
        throw std::invalid_argument("relation oracle is limited to degree " + std::to_string(kMaxOracleDegree));
    }
    const int n = quiver_.vertices();
    while (built_through() < d) {
        const int next = built_through() + 1;
        const std::uint64_t total = word_count(n, next);
        SparseRref<Rational> layer(total);
        auto col = [&](std::uint64_t code) { return static_cast<std::size_t>(total - 1 - code); };
        if (next == 2) {
            // e_i Omega e_i = alpha_i alpha_i^* - alpha_{i-1}^* alpha_{i-1}
            for (int i = 0; i < n; ++i) {
                const std::uint64_t base = static_cast<std::uint64_t>(i) << 2;
                SparseVector<Rational> v{{col(base | 0b01), Rational(1)}, {col(base | 0b10), Rational(-1)}};
                canonicalize(v);
                layer.insert(v);
            }
        } else if (next > 2) {
            const int prev = next - 1;
            const std::uint64_t prev_total = word_count(n, prev);
            const std::uint64_t mask_bits = (std::uint64_t{1} << prev) - 1;
            const auto& below = layers_[static_cast<std::size_t>(prev)];
            for (const auto& row : below.rows()) {
                const std::uint64_t any_code = prev_total - 1 - row.front().first;
                const int src = static_cast<int>(any_code >> prev);
                // left multiplication by the two arrows ending at src
                for (int starred = 0; starred < 2; ++starred) {
                    const int from = quiver_.wrap(starred ? src + 1 : src - 1);
                    SparseVector<Rational> v;
                    v.reserve(row.size());
                    for (const auto& [c, a] : row) {
                        const std::uint64_t code = prev_total - 1 - c;
                        const std::uint64_t mask = (static_cast<std::uint64_t>(starred) << prev) | (code & mask_bits);
                        v.emplace_back(col((static_cast<std::uint64_t>(from) << next) | mask), a);
                    }
                    canonicalize(v);
                    layer.insert(v);
                }
                // right multiplication by the two arrows leaving the common target
                for (int starred = 0; starred < 2; ++starred) {
                    SparseVector<Rational> v;
                    v.reserve(row.size());
                    for (const auto& [c, a] : row) {
                        const std::uint64_t code = prev_total - 1 - c;
                        const std::uint64_t mask = ((code & mask_bits) << 1) | static_cast<std::uint64_t>(starred);
                        v.emplace_back(col((static_cast<std::uint64_t>(src) << next) | mask), a);
                    }
                    canonicalize(v);
                    layer.insert(v);
                }
            }
        }
        layers_.push_back(std::move(layer));
    }
}

SparseVector<Rational> RelationOracle::reduce(int d, const SparseVector<Rational>& v) const {
    return layer(d).reduce(v);
}

SparseVector<Rational> RelationOracle::reduce(const Word& w) const {
    return reduce(w.length(), SparseVector<Rational>{{column(w), Rational(1)}});
}

bool RelationOracle::is_standard(const Word& w) const {
    return !layer(w.length()).is_pivot(column(w));
}

std::vector<Word> RelationOracle::standard_words(int d) const {
    std::vector<Word> out;
    const auto& l = layer(d);
    for (std::size_t c = l.cols(); c-- > 0;) {
        if (!l.is_pivot(c)) {
            out.push_back(word_at(d, c));
        }
    }
    return out;
}

IntMatrix RelationOracle::block_dimensions(int d) const {
    const int n = quiver_.vertices();
    IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    const auto& l = layer(d);
    const std::uint64_t total = word_count(n, d);
    for (std::size_t c = 0; c < l.cols(); ++c) {
        if (l.is_pivot(c)) {
            continue;
        }
        const std::uint64_t code = total - 1 - c;
        const auto src = static_cast<std::size_t>(code >> d);
        const auto tgt = static_cast<std::size_t>(code_target(quiver_, d, code));
        ++m[src][tgt];
    }
    return m;
}

HilbertReport hilbert(RelationOracle& oracle, int max_degree) {
    if (max_degree < 0) {
        throw std::invalid_argument("negative degree");
    }
    oracle.extend_to(max_degree);
    HilbertReport report;
    report.n = oracle.quiver().vertices();
    report.degree = max_degree;
    for (int d = 0; d <= max_degree; ++d) {
        report.total.push_back(static_cast<std::int64_t>(oracle.quotient_dimension(d)));
        report.matrix.push_back(oracle.block_dimensions(d));
    }
    return report;
}

HilbertReport hilbert(const QuiverA& q, int max_degree) {
    RelationOracle oracle(q);
    return hilbert(oracle, max_degree);
}

std::optional<int> first_recurrence_failure(const HilbertReport& report, const IntMatrix& adjacency) {
    for (std::size_t d = 2; d < report.matrix.size(); ++d) {
        IntMatrix expect = matrix_multiply(adjacency, report.matrix[d - 1]);
        for (std::size_t i = 0; i < expect.size(); ++i) {
            for (std::size_t j = 0; j < expect.size(); ++j) {
                expect[i][j] -= report.matrix[d - 2][i][j];
            }
        }
        if (expect != report.matrix[d]) {
            return static_cast<int>(d);
        }
    }
    return std::nullopt;
}

std::vector<IntMatrix> inverse_square_series(const IntMatrix& adjacency, int max_degree) {
    std::vector<IntMatrix> out;
    IntMatrix power = identity_matrix(static_cast<int>(adjacency.size()));
    for (int d = 0; d <= max_degree; ++d) {
        IntMatrix term = power;
        for (auto& row : term) {
            for (auto& v : row) {
                v *= d + 1;
            }
        }
        out.push_back(std::move(term));
        power = matrix_multiply(power, adjacency);
    }
    return out;
}

int default_truncation(int n) {
    return std::max(4 * n + 4, 24);
}

}  // namespace auslab
