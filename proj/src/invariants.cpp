#include <auslab/invariants.hpp>

#include <algorithm>
#include <map>

namespace auslab {

AlgebraElement reynolds(const Preprojective& r, const FiniteGroup& g, const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& h : g.elements()) {
        out += apply(r, h, x);
    }
    return Scalar(Rational(1, static_cast<long long>(g.order()))) * out;
}

SparseVector<Scalar> coordinates(const Preprojective& r, const AlgebraElement& x) {
    SparseVector<Scalar> v;
    v.reserve(x.size());
    for (const auto& [m, c] : x.terms()) {
        v.emplace_back(r.basis_index(m), c);
    }
    canonicalize(v);
    return v;
}

AlgebraElement from_coordinates(const Preprojective& r, int d, const SparseVector<Scalar>& v) {
    AlgebraElement out;
    const auto w = static_cast<std::size_t>(d + 1);
    for (const auto& [col, c] : v) {
        out.add_term(NFMonomial{r.quiver().wrap(static_cast<long long>(col / w)), static_cast<int>(col % w),
                                d - static_cast<int>(col % w)},
                     c);
    }
    return out;
}

InvariantBasis::InvariantBasis(const Preprojective& r, const FiniteGroup& g, int max_degree) : r_(r) {
    if (max_degree < 0) {
        throw std::invalid_argument("degree must be non-negative");
    }
    if (g.n() != r.n()) {
        throw std::invalid_argument("group acts on a different quiver");
    }
    for (int d = 0; d <= max_degree; ++d) {
        SparseRref<Scalar> rref(r.dimension(d));
        for (const auto& m : r.basis(d)) {
            rref.insert(coordinates(r, reynolds(r, g, AlgebraElement::monomial(m))));
        }
        std::vector<AlgebraElement> basis;
        for (const auto& row : rref.rows()) {
            basis.push_back(from_coordinates(r, d, row));
        }
        basis_.push_back(std::move(basis));
        rref_.push_back(std::move(rref));
    }
}

std::vector<std::size_t> InvariantBasis::dims() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis_) {
        out.push_back(b.size());
    }
    return out;
}

bool InvariantBasis::contains(const AlgebraElement& x) const {
    const int d = x.homogeneous_degree();
    if (x.is_zero()) {
        return true;
    }
    if (d == AlgebraElement::kMixedDegree || d > max_degree()) {
        throw std::invalid_argument("element is not homogeneous within the computed range");
    }
    return rref_[static_cast<std::size_t>(d)].contains(coordinates(r_, x));
}

std::array<std::array<std::size_t, 2>, 2> InvariantBasis::parity_block_dims(int d) const {
    if (r_.n() % 2 != 0) {
        throw std::invalid_argument("parity blocks need an even number of vertices");
    }
    std::array<std::array<std::size_t, 2>, 2> out{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            SparseRref<Scalar> rref(r_.dimension(d));
            for (const auto& x : basis(d)) {
                AlgebraElement part;
                for (const auto& [m, c] : x.terms()) {
                    if (m.source % 2 == a && r_.target(m) % 2 == b) {
                        part.add_term(m, c);
                    }
                }
                rref.insert(coordinates(r_, part));
            }
            out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = rref.rank();
        }
    }
    return out;
}

std::set<NFMonomial> orbit_of(const Preprojective& r, const FiniteGroup& g, const NFMonomial& p) {
    std::set<NFMonomial> out;
    for (const auto& h : g.elements()) {
        auto [c, img] = apply(r, h, p);
        if (!c.is_one()) {
            throw ScalarGroupOrbitNotMonomial("image of " + r.name(p) + " under " + h.str() + " has coefficient " +
                                              c.str());
        }
        out.insert(img);
    }
    return out;
}

std::string to_string(Parity p) {
    switch (p) {
        case Parity::All:
            return "all";
        case Parity::Even:
            return "even";
        case Parity::Odd:
            return "odd";
    }
    return "?";
}

std::set<NFMonomial> orbit_block(const Preprojective& r, int l, int k, Parity parity) {
    if (l < k || k < 0) {
        throw std::invalid_argument("orbit sums need l >= k >= 0");
    }
    if (parity != Parity::All && r.n() % 2 != 0) {
        throw std::invalid_argument("parity orbit sums need an even number of vertices");
    }
    std::set<NFMonomial> out;
    for (int i = 0; i < r.n(); ++i) {
        if ((parity == Parity::Even && i % 2 != 0) || (parity == Parity::Odd && i % 2 == 0)) {
            continue;
        }
        out.insert(NFMonomial{i, l, k});
        out.insert(NFMonomial{i, k, l});
    }
    return out;
}

OrbitSum orbit_sum(const Preprojective& r, int l, int k, Parity parity) {
    OrbitSum o{l, k, parity, {}};
    for (const auto& m : orbit_block(r, l, k, parity)) {
        o.value.add_term(m, Scalar(1));
    }
    return o;
}

bool RelationReport::stated_hold() const {
    return first_failure(true) == nullptr;
}

bool RelationReport::corrected_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds || !c.gating(); });
}

const RelationCheck* RelationReport::first_failure(bool as_stated) const {
    for (const auto& c : checks) {
        if (c.as_stated == as_stated && !c.holds) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

std::string label(int l, int k, Parity p) {
    std::string s = "O(" + std::to_string(l) + "," + std::to_string(k) + ")";
    if (p != Parity::All) {
        s += "^" + to_string(p);
    }
    return s;
}

Parity opposite(Parity p) {
    return p == Parity::Even ? Parity::Odd : Parity::Even;
}

void record(RelationReport& rep, const Preprojective& r, std::string family, std::string name, bool stated,
            const AlgebraElement& lhs, const AlgebraElement& rhs) {
    RelationCheck c;
    c.family = std::move(family);
    c.name = std::move(name);
    c.as_stated = stated;
    c.holds = lhs == rhs;
    if (!c.holds) {
        c.lhs = r.to_string(lhs);
        c.rhs = r.to_string(rhs);
    }
    rep.checks.push_back(std::move(c));
}

}  // namespace

RelationReport check_orbit_sum_relations(int n, int max_degree) {
    const Preprojective r(n);
    RelationReport rep;
    rep.n = n;
    rep.degree = max_degree;
    auto O = [&](int l, int k, Parity p = Parity::All) { return orbit_sum(r, l, k, p).value; };
    const Scalar two(2);

    const AlgebraElement o10 = O(1, 0);
    for (int total = 1; total + 1 <= max_degree; ++total) {
        for (int k = 0; 2 * k <= total; ++k) {
            const int l = total - k;
            const AlgebraElement lhs = r.multiply(o10, O(l, k));
            const std::string head = "O(1,0)*" + label(l, k, Parity::All) + " = ";
            if (l > k) {
                record(rep, r, "O1", head + label(l + 1, k, Parity::All) + " + " + label(l, k + 1, Parity::All), true,
                       lhs, O(l + 1, k) + O(l, k + 1));
                const Scalar c = l == k + 1 ? two : Scalar(1);
                record(rep, r, "O1",
                       head + label(l + 1, k, Parity::All) + " + " + c.str() + "*" + label(l, k + 1, Parity::All),
                       false, lhs, O(l + 1, k) + c * O(l, k + 1));
            } else {
                record(rep, r, "O1", head + label(l + 1, k, Parity::All), true, lhs, O(l + 1, k));
                record(rep, r, "O1", head + label(l + 1, k, Parity::All), false, lhs, O(l + 1, k));
            }
        }
    }
    const AlgebraElement o11 = O(1, 1);
    for (int m = 2; 2 * m <= max_degree; ++m) {
        record(rep, r, "O2", "O(1,1)^" + std::to_string(m) + " = " + label(m, m, Parity::All), true,
               r.power(o11, m), O(m, m));
    }

    if (n % 2 == 0) {
        for (Parity dot : {Parity::Even, Parity::Odd}) {
            const Parity dag = opposite(dot);
            const AlgebraElement first = O(1, 0, dot);
            for (int total = 1; total + 1 <= max_degree; ++total) {
                for (int k = 0; 2 * k <= total; ++k) {
                    const int l = total - k;
                    const AlgebraElement lhs = r.multiply(first, O(l, k, dag));
                    const std::string head = label(1, 0, dot) + "*" + label(l, k, dag) + " = ";
                    const Parity stated = total % 2 == 0 ? dag : dot;
                    if (l > k) {
                        record(rep, r, "WO1", head + label(l + 1, k, stated) + " + " + label(l, k + 1, stated), true,
                               lhs, O(l + 1, k, stated) + O(l, k + 1, stated));
                        const Scalar c = l == k + 1 ? two : Scalar(1);
                        record(rep, r, "WO1",
                               head + label(l + 1, k, dot) + " + " + c.str() + "*" + label(l, k + 1, dot), false,
                               lhs, O(l + 1, k, dot) + c * O(l, k + 1, dot));
                    } else {
                        record(rep, r, "WO1", head + label(l + 1, k, stated), true, lhs, O(l + 1, k, stated));
                        record(rep, r, "WO1", head + label(l + 1, k, dot), false, lhs, O(l + 1, k, dot));
                    }
                }
            }
            const AlgebraElement w11 = O(1, 1, dot);
            for (int m = 2; 2 * m <= max_degree; ++m) {
                record(rep, r, "WO2", "(" + label(1, 1, dot) + ")^" + std::to_string(m) + " = " + label(m, m, dot),
                       true, r.power(w11, m), O(m, m, dot));
            }
        }
    }

    // generator identities
    const AlgebraElement s1 = o10;
    const AlgebraElement s2 = O(2, 0);
    if (max_degree >= 3) {
        record(rep, r, "generators", "s1*s2 = s2*s1", true, r.multiply(s1, s2), r.multiply(s2, s1));
    }
    if (max_degree >= 2) {
        record(rep, r, "generators", "s1^2 = s2 + 2*O(1,1)", true, r.multiply(s1, s1), s2 + two * o11);
    }
    if (n % 2 == 0) {
        const AlgebraElement w1 = O(1, 0, Parity::Even);
        const AlgebraElement w2 = O(2, 0, Parity::Even);
        const AlgebraElement w1p = O(1, 0, Parity::Odd);
        const AlgebraElement w2p = O(2, 0, Parity::Odd);
        if (max_degree >= 3) {
            record(rep, r, "generators", "s2*s1 = s1*s2'", true, r.multiply(w2, w1), r.multiply(w1, w2p));
            record(rep, r, "generators", "s2'*s1' = s1'*s2", true, r.multiply(w2p, w1p), r.multiply(w1p, w2));
        }
        if (max_degree >= 2) {
            record(rep, r, "generators", "s1*s1' = s2 + 2*O(1,1)^even", true, r.multiply(w1, w1p),
                   w2 + two * O(1, 1, Parity::Even));
        }
    }
    return rep;
}

std::string to_string(PresentationTarget t) {
    return t == PresentationTarget::PolynomialTwoVars ? "PolynomialTwoVars" : "TwoVertexQuiver";
}

std::size_t two_var_series(int d) {
    return d < 0 ? 0 : static_cast<std::size_t>(d / 2 + 1);
}

namespace {

bool invariant_under(const Preprojective& r, const FiniteGroup& g, const AlgebraElement& x) {
    for (const auto& h : g.generators()) {
        if (apply(r, h, x) != x) {
            return false;
        }
    }
    return true;
}

std::size_t rank_of(const Preprojective& r, int d, const std::vector<AlgebraElement>& xs) {
    SparseRref<Scalar> rref(r.dimension(d));
    for (const auto& x : xs) {
        rref.insert(coordinates(r, x));
    }
    return rref.rank();
}

void finish(PresentationReport& rep) {
    rep.bijective_through = -1;
    for (const auto& c : rep.degrees) {
        if (!c.ok) {
            break;
        }
        rep.bijective_through = c.degree;
    }
}

PresentationReport present_dihedral(int n, int max_degree) {
    const Preprojective r(n);
    const FiniteGroup g = dihedral_group(n);
    const InvariantBasis inv(r, g, max_degree);
    PresentationReport rep;
    rep.target = PresentationTarget::PolynomialTwoVars;
    rep.n = n;
    rep.degree = max_degree;
    const AlgebraElement s1 = orbit_sum(r, 1, 0).value;
    const AlgebraElement s2 = orbit_sum(r, 2, 0).value;
    rep.well_defined = r.multiply(s1, s2) == r.multiply(s2, s1) && invariant_under(r, g, s1) &&
                       invariant_under(r, g, s2);
    if (!rep.well_defined) {
        rep.failures.push_back("s1 and s2 do not commute or are not invariant");
    }
    std::vector<AlgebraElement> p1{r.one()};
    std::vector<AlgebraElement> p2{r.one()};
    for (int a = 1; a <= max_degree; ++a) {
        p1.push_back(r.multiply(p1.back(), s1));
    }
    for (int b = 1; 2 * b <= max_degree; ++b) {
        p2.push_back(r.multiply(p2.back(), s2));
    }
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<AlgebraElement> images;
        bool inside = true;
        for (int b = 0; 2 * b <= d; ++b) {
            images.push_back(r.multiply(p1[static_cast<std::size_t>(d - 2 * b)], p2[static_cast<std::size_t>(b)]));
            inside = inside && inv.contains(images.back());
        }
        DegreeCheck c;
        c.degree = d;
        c.source_dim = images.size();
        c.image_rank = rank_of(r, d, images);
        c.invariant_dim = inv.dimension(d);
        c.expected_dim = two_var_series(d);
        c.ok = inside && c.source_dim == c.image_rank && c.image_rank == c.invariant_dim &&
               c.invariant_dim == c.expected_dim;
        if (!c.ok) {
            rep.failures.push_back("degree " + std::to_string(d) + ": monomials " + std::to_string(c.source_dim) +
                                   ", image rank " + std::to_string(c.image_rank) + ", invariants " +
                                   std::to_string(c.invariant_dim) + ", series " + std::to_string(c.expected_dim));
        }
        rep.degrees.push_back(c);
    }
    finish(rep);
    return rep;
}

// Two-vertex quiver: vertex 0 <-> even sources, vertex 1 <-> odd.
struct Letter {
    int from;
    int to;
    int degree;
};
constexpr Letter kLetters[4] = {{0, 1, 1}, {1, 0, 1}, {0, 0, 2}, {1, 1, 2}};  // u1 u2 v1 v2

struct QPath {
    int start = 0;
    std::vector<int> letters;
    int end() const { return letters.empty() ? start : kLetters[letters.back()].to; }
    auto operator<=>(const QPath&) const = default;
};

std::vector<std::vector<QPath>> quiver_paths(int max_degree) {
    std::vector<std::vector<QPath>> by_degree(static_cast<std::size_t>(max_degree + 1));
    by_degree[0] = {QPath{0, {}}, QPath{1, {}}};
    for (int d = 1; d <= max_degree; ++d) {
        for (int l = 0; l < 4; ++l) {
            const int prev = d - kLetters[l].degree;
            if (prev < 0) {
                continue;
            }
            for (const auto& p : by_degree[static_cast<std::size_t>(prev)]) {
                if (p.end() == kLetters[l].from) {
                    QPath q = p;
                    q.letters.push_back(l);
                    by_degree[static_cast<std::size_t>(d)].push_back(std::move(q));
                }
            }
        }
        std::sort(by_degree[static_cast<std::size_t>(d)].begin(), by_degree[static_cast<std::size_t>(d)].end());
    }
    return by_degree;
}

PresentationReport present_vertex_reflections(int n, int max_degree) {
    if (n % 2 != 0) {
        throw std::invalid_argument("the two-vertex presentation needs an even number of vertices");
    }
    const Preprojective r(n);
    const FiniteGroup g = vertex_reflection_group(n);
    const InvariantBasis inv(r, g, max_degree);
    PresentationReport rep;
    rep.target = PresentationTarget::TwoVertexQuiver;
    rep.n = n;
    rep.degree = max_degree;

    const AlgebraElement image_of[4] = {orbit_sum(r, 1, 0, Parity::Even).value, orbit_sum(r, 1, 0, Parity::Odd).value,
                                        orbit_sum(r, 2, 0, Parity::Even).value, orbit_sum(r, 2, 0, Parity::Odd).value};
    const AlgebraElement idem[2] = {orbit_sum(r, 0, 0, Parity::Even).value, orbit_sum(r, 0, 0, Parity::Odd).value};
    auto phi = [&](const QPath& p) {
        AlgebraElement x = idem[p.start];
        for (int l : p.letters) {
            x = r.multiply(x, image_of[l]);
        }
        return x;
    };

    // v1 u1 - u1 v2 and v2 u2 - u2 v1, composing left to right
    const std::vector<std::pair<QPath, QPath>> relations = {{QPath{0, {2, 0}}, QPath{0, {0, 3}}},
                                                            {QPath{1, {3, 1}}, QPath{1, {1, 2}}}};
    rep.well_defined = true;
    for (const auto& [a, b] : relations) {
        if (phi(a) != phi(b)) {
            rep.well_defined = false;
            rep.failures.push_back("a defining relation does not map to zero");
        }
    }
    for (int l = 0; l < 4; ++l) {
        if (!invariant_under(r, g, image_of[l])) {
            rep.well_defined = false;
            rep.failures.push_back("generator image is not invariant");
        }
    }

    const auto paths = quiver_paths(max_degree);
    for (int d = 0; d <= max_degree; ++d) {
        const auto& here = paths[static_cast<std::size_t>(d)];
        std::map<QPath, std::size_t> index;
        for (std::size_t i = 0; i < here.size(); ++i) {
            index.emplace(here[i], i);
        }
        // K_d = span of p * rel * q
        SparseRref<Rational> kernel(here.size());
        for (const auto& [a, b] : relations) {
            for (int left = 0; left + 3 <= d; ++left) {
                for (const auto& p : paths[static_cast<std::size_t>(left)]) {
                    if (p.end() != a.start) {
                        continue;
                    }
                    for (const auto& q : paths[static_cast<std::size_t>(d - 3 - left)]) {
                        if (q.start != a.end()) {
                            continue;
                        }
                        auto glue = [&](const QPath& mid) {
                            QPath w = p;
                            w.letters.insert(w.letters.end(), mid.letters.begin(), mid.letters.end());
                            w.letters.insert(w.letters.end(), q.letters.begin(), q.letters.end());
                            return index.at(w);
                        };
                        SparseVector<Rational> v{{glue(a), Rational(1)}, {glue(b), Rational(-1)}};
                        canonicalize(v);
                        kernel.insert(v);
                    }
                }
            }
        }
        const auto inv_blocks = inv.parity_block_dims(d);
        const std::size_t count = two_var_series(d);
        DegreeCheck c;
        c.degree = d;
        c.source_dim = here.size() - kernel.rank();
        c.invariant_dim = inv.dimension(d);
        c.expected_dim = 2 * count;
        bool blocks_ok = true;
        std::vector<AlgebraElement> all_images;
        for (int s = 0; s < 2; ++s) {
            for (int t = 0; t < 2; ++t) {
                std::vector<AlgebraElement> images;
                std::size_t paths_in_block = 0;
                std::size_t kernel_in_block = 0;
                for (std::size_t i = 0; i < here.size(); ++i) {
                    if (here[i].start == s && here[i].end() == t) {
                        ++paths_in_block;
                        kernel_in_block += kernel.is_pivot(i);
                        images.push_back(phi(here[i]));
                    }
                }
                const std::size_t quotient = paths_in_block - kernel_in_block;
                const std::size_t rank = rank_of(r, d, images);
                const bool diagonal = s == t;
                const std::size_t expected = (d % 2 == 0) == diagonal ? count : 0;
                const std::size_t inv_block = inv_blocks[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
                if (quotient != rank || rank != inv_block || inv_block != expected) {
                    blocks_ok = false;
                    rep.failures.push_back("degree " + std::to_string(d) + " block (" + std::to_string(s) + "," +
                                           std::to_string(t) + "): quotient " + std::to_string(quotient) +
                                           ", image rank " + std::to_string(rank) + ", invariants " +
                                           std::to_string(inv_block) + ", series " + std::to_string(expected));
                }
                all_images.insert(all_images.end(), images.begin(), images.end());
            }
        }
        c.image_rank = rank_of(r, d, all_images);
        c.ok = blocks_ok && c.source_dim == c.image_rank && c.image_rank == c.invariant_dim &&
               c.invariant_dim == c.expected_dim;
        if (!c.ok && blocks_ok) {
            rep.failures.push_back("degree " + std::to_string(d) + ": quotient " + std::to_string(c.source_dim) +
                                   ", image rank " + std::to_string(c.image_rank) + ", invariants " +
                                   std::to_string(c.invariant_dim) + ", series " + std::to_string(c.expected_dim));
        }
        rep.degrees.push_back(c);
    }
    finish(rep);
    return rep;
}

}  // namespace

PresentationReport verify_presentation(int n, PresentationTarget target, int max_degree) {
    if (max_degree < 0) {
        throw std::invalid_argument("degree must be non-negative");
    }
    return target == PresentationTarget::PolynomialTwoVars ? present_dihedral(n, max_degree)
                                                           : present_vertex_reflections(n, max_degree);
}

bool ModuleReport::ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& c) { return c.ok; });
}

ModuleReport verify_free_module(const Preprojective& r, const FiniteGroup& g, int max_degree) {
    const InvariantBasis inv(r, g, max_degree);
    const int n = r.n();
    ModuleReport rep;
    rep.name = "free_module";
    rep.n = n;
    rep.degree = max_degree;
    for (int d = 0; d <= max_degree; ++d) {
        ModuleCheck c;
        c.degree = d;
        std::vector<AlgebraElement> all;
        for (int i = 0; i < n; ++i) {
            std::vector<AlgebraElement> e_part;
            for (const auto& b : inv.basis(d)) {
                e_part.push_back(r.multiply(r.idempotent(i), b));
            }
            c.parts += rank_of(r, d, e_part);
            all.insert(all.end(), e_part.begin(), e_part.end());
            if (d > 0) {
                std::vector<AlgebraElement> a_part;
                for (const auto& b : inv.basis(d - 1)) {
                    a_part.push_back(r.multiply(r.arrow(Arrow{i, false}), b));
                }
                c.parts += rank_of(r, d, a_part);
                all.insert(all.end(), a_part.begin(), a_part.end());
            }
        }
        c.rank = rank_of(r, d, all);
        c.expected = r.dimension(d);
        c.ok = c.parts == c.rank && c.rank == c.expected;
        rep.degrees.push_back(c);
    }
    return rep;
}

ModuleReport verify_shift_summand(const Preprojective& r, const FiniteGroup& g, int max_degree) {
    const InvariantBasis inv(r, g, max_degree);
    const int n = r.n();
    const AlgebraElement a = r.arrow(Arrow{n - 1, false});
    ModuleReport rep;
    rep.name = "shift_summand";
    rep.n = n;
    rep.degree = max_degree;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<AlgebraElement> src;
        std::vector<AlgebraElement> dst;
        for (const auto& b : inv.basis(d)) {
            src.push_back(r.multiply(r.idempotent(0), b));
            dst.push_back(r.multiply(a, src.back()));
        }
        ModuleCheck c;
        c.degree = d;
        c.parts = rank_of(r, d, src);
        c.rank = rank_of(r, d + 1, dst);
        c.expected = c.parts;
        c.ok = c.parts == c.rank && c.parts > 0;
        rep.degrees.push_back(c);
    }
    return rep;
}

}  // namespace auslab
