#include <auslab/smash.hpp>

#include <algorithm>
#include <numeric>

namespace auslab {

SmashElement SmashElement::term(const NFMonomial& m, std::size_t g, Scalar coeff) {
    SmashElement x;
    x.add_term(m, g, coeff);
    return x;
}

void SmashElement::add_term(const NFMonomial& m, std::size_t g, const Scalar& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(Key{m, g}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Scalar SmashElement::coefficient(const NFMonomial& m, std::size_t g) const {
    auto it = terms_.find(Key{m, g});
    return it == terms_.end() ? Scalar(0) : it->second;
}

int SmashElement::homogeneous_degree() const {
    if (terms_.empty()) {
        return 0;
    }
    const int d = terms_.begin()->first.first.degree();
    for (const auto& [key, c] : terms_) {
        if (key.first.degree() != d) {
            return AlgebraElement::kMixedDegree;
        }
    }
    return d;
}

SmashElement& SmashElement::operator+=(const SmashElement& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
        add_term(key.first, key.second, c);
    }
    return *this;
}

SmashElement& SmashElement::operator-=(const SmashElement& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
        add_term(key.first, key.second, -c);
    }
    return *this;
}

SmashElement& SmashElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) {
        v *= c;
    }
    return *this;
}

SmashElement SmashAlgebra::multiply(const SmashElement& x, const SmashElement& y) const {
    SmashElement out;
    for (const auto& [kx, cx] : x.terms()) {
        const Automorphism& g1 = g_[kx.second];
        for (const auto& [ky, cy] : y.terms()) {
            auto [s, moved] = apply(r_, g1, ky.first);
            auto m = r_.multiply(kx.first, moved);
            if (!m) {
                continue;
            }
            out.add_term(*m, g_.product(kx.second, ky.second), cx * cy * s);
        }
    }
    return out;
}

SmashElement SmashAlgebra::one() const {
    return embed(r_.one());
}

SmashElement SmashAlgebra::f() const {
    SmashElement out;
    for (std::size_t g = 0; g < g_.order(); ++g) {
        for (int i = 0; i < r_.n(); ++i) {
            out.add_term(NFMonomial{i, 0, 0}, g, Scalar(1));
        }
    }
    return out;
}

SmashElement SmashAlgebra::embed(const AlgebraElement& x, std::size_t g) const {
    SmashElement out;
    for (const auto& [m, c] : x.terms()) {
        out.add_term(m, g, c);
    }
    return out;
}

std::string SmashAlgebra::to_string(const SmashElement& x) const {
    if (x.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [key, c] : x.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (!c.is_one()) {
            out += "(" + c.str() + ")*";
        }
        out += r_.name(key.first) + "#" + g_[key.second].str();
    }
    return out;
}

AlgebraElement eval_auslander_map(const SmashAlgebra& s, const NFMonomial& a, std::size_t g, const AlgebraElement& b) {
    const AlgebraElement moved = apply(s.ring(), s.group()[g], b);
    return s.ring().multiply(AlgebraElement::monomial(a), moved);
}

AlgebraElement eval_auslander_map(const SmashAlgebra& s, const SmashElement& x, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [key, c] : x.terms()) {
        out += c * eval_auslander_map(s, key.first, key.second, b);
    }
    return out;
}

IdealTruncation::IdealTruncation(const Preprojective& r, const FiniteGroup& g) : r_(r), g_(g), smash_(r, g) {
    if (r.n() != g.n()) {
        throw std::invalid_argument("group acts on a different quiver");
    }
}

std::size_t IdealTruncation::block_of(const NFMonomial& m, std::size_t g) const {
    const auto n = static_cast<std::size_t>(r_.n());
    const int v = g_[g_.inverse(g)].vertex_image(r_.target(m));
    return static_cast<std::size_t>(r_.quiver().wrap(m.source)) * n + static_cast<std::size_t>(v);
}

IdealTruncation::Layer IdealTruncation::make_layer(int d) const {
    const auto n = static_cast<std::size_t>(r_.n());
    const std::size_t k = g_.order();
    const auto basis = r_.basis(d);
    Layer layer;
    layer.degree = d;
    layer.coords.resize(n * n);
    layer.identity_start.resize(n * n);
    layer.where.resize(basis.size() * k);
    auto place = [&](std::size_t g) {
        for (std::size_t mi = 0; mi < basis.size(); ++mi) {
            const std::size_t b = block_of(basis[mi], g);
            layer.where[mi * k + g] = {b, layer.coords[b].size()};
            layer.coords[b].emplace_back(mi, g);
        }
    };
    for (std::size_t g = 1; g < k; ++g) {
        place(g);
    }
    for (std::size_t b = 0; b < n * n; ++b) {
        layer.identity_start[b] = layer.coords[b].size();
    }
    place(FiniteGroup::identity());
    layer.blocks.reserve(n * n);
    for (std::size_t b = 0; b < n * n; ++b) {
        layer.blocks.emplace_back(layer.coords[b].size());
    }
    return layer;
}

std::vector<SparseVector<Scalar>> IdealTruncation::split(const Layer& layer, const SmashElement& x) const {
    std::vector<SparseVector<Scalar>> parts(layer.blocks.size());
    const std::size_t k = g_.order();
    for (const auto& [key, c] : x.terms()) {
        const auto [b, col] = layer.where[r_.basis_index(key.first) * k + key.second];
        parts[b].emplace_back(col, c);
    }
    for (auto& p : parts) {
        canonicalize(p);
    }
    return parts;
}

void IdealTruncation::insert(Layer& layer, const SmashElement& x) {
    auto parts = split(layer, x);
    for (std::size_t b = 0; b < parts.size(); ++b) {
        if (!parts[b].empty()) {
            layer.blocks[b].insert(parts[b]);
        }
    }
}

void IdealTruncation::extend_to(int d) {
    const int n = r_.n();
    const std::size_t k = g_.order();
    for (int deg = built_through() + 1; deg <= d; ++deg) {
        Layer layer = make_layer(deg);

        // Left multiples of the previous layer by arrows.
        if (deg > 0) {
            const Layer& prev = layers_.back();
            const int pd = prev.degree;
            for (std::size_t b = 0; b < prev.blocks.size(); ++b) {
                const int src = static_cast<int>(b / static_cast<std::size_t>(n));
                // arrows ending at src: alpha_{src-1} and alpha_src^*
                const NFMonomial into[2] = {NFMonomial{r_.quiver().wrap(src - 1), 1, 0},
                                            NFMonomial{r_.quiver().wrap(src + 1), 0, 1}};
                for (const auto& row : prev.blocks[b].rows()) {
                    for (const NFMonomial& a : into) {
                        SparseVector<Scalar> v;
                        v.reserve(row.size());
                        std::size_t nb = 0;
                        for (const auto& [col, c] : row) {
                            const auto [mi, g] = prev.coords[b][col];
                            const auto pw = static_cast<std::size_t>(pd + 1);
                            const NFMonomial m{static_cast<int>(mi / pw), static_cast<int>(mi % pw),
                                               pd - static_cast<int>(mi % pw)};
                            const NFMonomial prod = *r_.multiply(a, m);
                            const auto [blk, local] = layer.where[r_.basis_index(prod) * k + g];
                            nb = blk;
                            v.emplace_back(local, c);
                        }
                        canonicalize(v);
                        layer.blocks[nb].insert(v);
                    }
                }
            }
        }

        // (e_i#1) f_G (q#h) = sum over g with g(s(q)) = i of g(q) # gh
        const auto basis = r_.basis(deg);
        for (const NFMonomial& q : basis) {
            for (std::size_t h = 0; h < k; ++h) {
                std::vector<SmashElement> by_source(static_cast<std::size_t>(n));
                for (std::size_t g = 0; g < k; ++g) {
                    auto [c, img] = apply(r_, g_[g], q);
                    by_source[static_cast<std::size_t>(img.source)].add_term(img, g_.product(g, h), c);
                }
                for (const auto& x : by_source) {
                    if (!x.is_zero()) {
                        insert(layer, x);
                    }
                }
            }
        }
        layers_.push_back(std::move(layer));
    }
}

std::size_t IdealTruncation::dimension(int d) const {
    std::size_t total = 0;
    for (const auto& b : layers_.at(static_cast<std::size_t>(d)).blocks) {
        total += b.rank();
    }
    return total;
}

std::size_t IdealTruncation::identity_intersection(int d) const {
    const Layer& layer = layers_.at(static_cast<std::size_t>(d));
    std::size_t total = 0;
    for (std::size_t b = 0; b < layer.blocks.size(); ++b) {
        total += layer.blocks[b].pivots_at_or_after(layer.identity_start[b]);
    }
    return total;
}

std::size_t IdealTruncation::identity_component_dimension(int d) const {
    return r_.dimension(d) - identity_intersection(d);
}

SmashElement IdealTruncation::remainder(const SmashElement& x) {
    const int d = x.homogeneous_degree();
    if (d == AlgebraElement::kMixedDegree) {
        throw MixedDegreeError("membership needs a homogeneous element");
    }
    if (x.is_zero()) {
        return x;
    }
    extend_to(d);
    const Layer& layer = layers_[static_cast<std::size_t>(d)];
    const auto parts = split(layer, x);
    const auto w = static_cast<std::size_t>(d + 1);
    SmashElement out;
    for (std::size_t b = 0; b < parts.size(); ++b) {
        if (parts[b].empty()) {
            continue;
        }
        for (const auto& [col, c] : layer.blocks[b].reduce(parts[b])) {
            const auto [mi, g] = layer.coords[b][col];
            out.add_term(NFMonomial{static_cast<int>(mi / w), static_cast<int>(mi % w), d - static_cast<int>(mi % w)},
                         g, c);
        }
    }
    return out;
}

bool IdealTruncation::contains(const SmashElement& x) {
    return remainder(x).is_zero();
}

std::vector<SmashElement> IdealTruncation::basis(int d) const {
    const Layer& layer = layers_.at(static_cast<std::size_t>(d));
    const auto w = static_cast<std::size_t>(d + 1);
    std::vector<SmashElement> out;
    for (std::size_t b = 0; b < layer.blocks.size(); ++b) {
        for (const auto& row : layer.blocks[b].rows()) {
            SmashElement x;
            for (const auto& [col, c] : row) {
                const auto [mi, g] = layer.coords[b][col];
                x.add_term(NFMonomial{static_cast<int>(mi / w), static_cast<int>(mi % w), d - static_cast<int>(mi % w)},
                           g, c);
            }
            out.push_back(std::move(x));
        }
    }
    return out;
}

std::vector<std::size_t> identity_component_dims(const Preprojective& r, const FiniteGroup& g, int max_degree) {
    if (max_degree < 0) {
        throw std::invalid_argument("degree must be non-negative");
    }
    IdealTruncation ideal(r, g);
    ideal.extend_to(max_degree);
    std::vector<std::size_t> dims;
    for (int d = 0; d <= max_degree; ++d) {
        dims.push_back(ideal.identity_component_dimension(d));
    }
    return dims;
}

std::string to_string(GrowthKind kind) {
    switch (kind) {
        case GrowthKind::FiniteDim:
            return "FiniteDim";
        case GrowthKind::GK1:
            return "GK1";
        case GrowthKind::GK2Likely:
            return "GK2Likely";
        case GrowthKind::Inconclusive:
            return "Inconclusive";
    }
    return "?";
}

GrowthVerdict growth_classify(const std::vector<std::size_t>& dims, int window,
                              std::optional<std::size_t> expected_increment) {
    if (window < 1 || dims.size() < 2 * static_cast<std::size_t>(window)) {
        throw WindowTooLargeError("growth window " + std::to_string(window) + " needs at least " +
                                  std::to_string(2 * window) + " dimensions, got " + std::to_string(dims.size()));
    }
    GrowthVerdict v;
    v.dims = dims;
    v.window = window;
    const auto w = static_cast<std::size_t>(window);
    const auto tail_begin = dims.end() - static_cast<std::ptrdiff_t>(w);
    const auto prev_begin = tail_begin - static_cast<std::ptrdiff_t>(w);
    v.tail_max = *std::max_element(tail_begin, dims.end());
    v.previous_max = *std::max_element(prev_begin, tail_begin);

    std::size_t z = dims.size();
    while (z > 0 && dims[z - 1] == 0) {
        --z;
    }
    v.first_zero_degree = z == dims.size() ? -1 : static_cast<int>(z);

    if (v.tail_max == 0) {
        v.kind = GrowthKind::FiniteDim;
        return v;
    }
    bool linear = true;
    const auto step = static_cast<long long>(*(tail_begin)) - static_cast<long long>(*(tail_begin - 1));
    for (auto it = tail_begin; it != dims.end(); ++it) {
        const auto inc = static_cast<long long>(*it) - static_cast<long long>(*(it - 1));
        if (inc != step) {
            linear = false;
            break;
        }
    }
    if (linear && step > 0 && (!expected_increment || static_cast<long long>(*expected_increment) == step)) {
        v.kind = GrowthKind::GK2Likely;
        return v;
    }
    if (v.tail_max == v.previous_max) {
        v.kind = GrowthKind::GK1;
        return v;
    }
    v.kind = GrowthKind::Inconclusive;
    return v;
}

int default_window(int max_degree) {
    return std::max(1, (max_degree + 1) / 4);
}

std::optional<int> scalar_case(const FiniteGroup& g) {
    if (!g.has_scalars()) {
        return std::nullopt;
    }
    const std::size_t m = g.order();
    for (const auto& x : g.elements()) {
        if (!x.is_dihedral_identity()) {
            return std::nullopt;
        }
    }
    // a generator of the cyclic group
    const Automorphism* sigma = nullptr;
    for (const auto& x : g.elements()) {
        std::size_t order = 1;
        auto idx = g.index_of(x).value();
        for (std::size_t p = idx; p != FiniteGroup::identity(); p = g.product(idx, p)) {
            ++order;
        }
        if (order == m) {
            sigma = &x;
            break;
        }
    }
    if (sigma == nullptr) {
        return std::nullopt;
    }
    const int n = g.n();
    const Scalar& z = sigma->xi(Arrow{0, false});
    bool all_equal = true;
    Scalar prod(1);
    for (int i = 0; i < n; ++i) {
        const Scalar& xi = sigma->xi(Arrow{i, false});
        all_equal = all_equal && xi == z;
        prod *= xi;
    }
    const auto zo = multiplicative_order(z);
    if (all_equal && zo && static_cast<std::size_t>(*zo) == m) {
        return 1;
    }
    const auto po = multiplicative_order(prod);
    if (po && static_cast<std::size_t>(*po) == m) {
        return 2;
    }
    return std::nullopt;
}

int default_auslander_degree(int n, const FiniteGroup& g) {
    if (!g.has_scalars()) {
        return 4 * n + 4;
    }
    const int m = static_cast<int>(g.order());
    if (scalar_case(g) == 1) {
        return 4 * m + 2;
    }
    return 4 * m * n + 2;
}

AuslanderReport auslander_verdict(int n, const FiniteGroup& g, int max_degree) {
    if (g.n() != n) {
        throw std::invalid_argument("group acts on a different quiver");
    }
    const Preprojective r(n);
    AuslanderReport rep;
    rep.n = n;
    rep.degree = max_degree;
    rep.group = describe(g).label();
    rep.order = g.order();
    const int window = default_window(max_degree);
    rep.growth = growth_classify(identity_component_dims(r, g, max_degree), window);
    switch (rep.growth.kind) {
        case GrowthKind::FiniteDim:
            rep.pertinency = 2;
            rep.verdict = Verdict::Iso;
            break;
        case GrowthKind::GK1:
            rep.pertinency = 1;
            rep.verdict = Verdict::NotIso;
            break;
        case GrowthKind::GK2Likely:
            rep.pertinency = 0;
            rep.verdict = Verdict::NotIso;
            break;
        case GrowthKind::Inconclusive:
            rep.verdict = Verdict::Unknown;
            rep.note = "growth of the identity component is inconclusive through degree " +
                       std::to_string(max_degree) + "; rerun with a larger --degree";
            break;
    }
    if (!g.has_scalars()) {
        rep.classifier = classify_auslander(n, g);
        rep.agree = *rep.classifier == rep.verdict;
    }
    return rep;
}

std::optional<std::size_t> stabilizer_reflection(const FiniteGroup& g) {
    std::optional<std::size_t> found;
    for (std::size_t i = 1; i < g.order(); ++i) {
        const Automorphism& x = g[i];
        if (x.has_scalars() || x.vertex_image(0) != 0) {
            continue;
        }
        if (found) {
            return std::nullopt;
        }
        found = i;
    }
    return found;
}

PathDifferenceCertificate path_difference_certificate(const Preprojective& r, const FiniteGroup& g, IdealTruncation& ideal) {
    const int n = r.n();
    const SmashAlgebra s(r, g);
    const NFMonomial p{0, n, 0};
    const NFMonomial q{0, 0, n};
    PathDifferenceCertificate out;
    out.membership.name = "(p-q)#1";
    out.membership.element = SmashElement::term(p, 0) - SmashElement::term(q, 0);
    out.membership.in_ideal = ideal.contains(out.membership.element);
    out.r0 = stabilizer_reflection(g);
    if (out.r0) {
        const NFMonomial e0{0, 0, 0};
        const SmashElement f1 = SmashElement::term(e0, 0) + SmashElement::term(e0, *out.r0);
        const SmashElement rhs =
            s.multiply(SmashElement::term(p, 0), f1) - s.multiply(f1, SmashElement::term(q, 0));
        out.factorisation_holds = rhs == out.membership.element && ideal.contains(f1);
    }
    return out;
}

std::vector<Certificate> scalar_certificates(const Preprojective& r, const FiniteGroup& g, IdealTruncation& ideal) {
    std::vector<Certificate> out;
    const auto c = scalar_case(g);
    if (!c) {
        return out;
    }
    const int m = static_cast<int>(g.order());
    const int len = *c == 1 ? m : m * r.n();
    const NFMonomial p{0, len, 0};
    const NFMonomial q{0, 0, len};
    for (const auto& mono : {p, q}) {
        Certificate cert;
        cert.name = r.name(mono) + "#1";
        cert.element = SmashElement::term(mono, 0);
        cert.in_ideal = ideal.contains(cert.element);
        out.push_back(std::move(cert));
    }
    return out;
}

}  // namespace auslab
