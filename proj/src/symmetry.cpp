#include <auslab/symmetry.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace auslab {

std::string to_string(AutomorphismKind kind) {
    switch (kind) {
        case AutomorphismKind::StarPreserving:
            return "StarPreserving";
        case AutomorphismKind::StarInverting:
            return "StarInverting";
        case AutomorphismKind::ScalarDiag:
            return "ScalarDiag";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Iso:
            return "Iso";
        case Verdict::NotIso:
            return "NotIso";
        case Verdict::Unknown:
            return "Unknown";
    }
    return "?";
}

Validation validate(const Automorphism& g) {
    const int n = g.n();
    const QuiverA q(n);
    // Omega as a free degree-2 vector keyed by word code.
    std::map<std::uint64_t, Scalar> omega;
    std::map<std::uint64_t, Scalar> image;
    for (int i = 0; i < n; ++i) {
        const Word plus{i, {Arrow{i, false}, Arrow{i, true}}};
        const Word minus{q.wrap(i + 1), {Arrow{i, true}, Arrow{i, false}}};
        omega[word_code(q, plus)] += Scalar(1);
        omega[word_code(q, minus)] -= Scalar(1);
        auto [cp, wp] = apply_word_automorphism(q, g, plus);
        auto [cm, wm] = apply_word_automorphism(q, g, minus);
        image[word_code(q, wp)] += cp;
        image[word_code(q, wm)] -= cm;
    }
    const auto& [first_code, first_coeff] = *omega.begin();
    const Scalar ratio = image.count(first_code) ? image[first_code] / first_coeff : Scalar(0);
    for (const auto& [code, coeff] : omega) {
        const Scalar got = image.count(code) ? image[code] : Scalar(0);
        if (ratio.is_zero() || got != ratio * coeff) {
            const Word w = word_from_code(q, 2, code);
            throw NotAnAutomorphismError("sigma(Omega) is not a multiple of Omega: component e_" +
                                         std::to_string(w.source) + " Omega e_" + std::to_string(w.source) +
                                         " maps to a different multiple (word " + to_string(q, w) + ")");
        }
    }

    for (const auto& [code, coeff] : image) {
        if (!coeff.is_zero() && !omega.count(code)) {
            throw NotAnAutomorphismError("sigma(Omega) has a term outside Omega: " +
                                         to_string(q, word_from_code(q, 2, code)));
        }
    }

    Validation v{AutomorphismKind::StarPreserving, ratio};
    if (g.is_dihedral_identity()) {
        v.kind = AutomorphismKind::ScalarDiag;
        const Scalar h = g.xi(Arrow{0, false}) * g.xi(Arrow{0, true});
        for (int i = 1; i < n; ++i) {
            if (g.xi(Arrow{i, false}) * g.xi(Arrow{i, true}) != h) {
                throw NotAnAutomorphismError("xi_i xi_i^* is not constant (vertex " + std::to_string(i) + ")");
            }
        }
        v.omega = h;
    } else if (g.reflection()) {
        v.kind = AutomorphismKind::StarInverting;
    }
    return v;
}

std::pair<Scalar, NFMonomial> apply(const Preprojective& r, const Automorphism& g, const NFMonomial& m) {
    const NFMonomial image = g.reflection() ? NFMonomial{g.vertex_image(m.source), m.stars, m.nonstars}
                                            : NFMonomial{g.vertex_image(m.source), m.nonstars, m.stars};
    if (!g.has_scalars()) {
        return {Scalar(1), image};
    }
    Scalar coeff(1);
    const int n = r.n();
    int at = r.quiver().wrap(m.source);
    for (int t = 0; t < m.nonstars; ++t) {
        coeff *= g.xi(Arrow{at, false});
        at = (at + 1) % n;
    }
    for (int t = 0; t < m.stars; ++t) {
        at = (at + n - 1) % n;
        coeff *= g.xi(Arrow{at, true});
    }
    return {coeff, image};
}

AlgebraElement apply(const Preprojective& r, const Automorphism& g, const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) {
        auto [s, img] = apply(r, g, m);
        out.add_term(img, c * s);
    }
    return out;
}

FiniteGroup::FiniteGroup(int n, std::vector<Automorphism> elements, std::vector<Automorphism> generators)
    : n_(n), elements_(std::move(elements)), generators_(std::move(generators)), field_(&CyclotomicField::rationals()) {
    if (elements_.empty() || !elements_.front().is_identity()) {
        throw std::invalid_argument("finite group must list the identity first");
    }
    const std::size_t k = elements_.size();
    table_.resize(k * k);
    inverse_.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            auto idx = index_of(elements_[a] * elements_[b]);
            if (!idx) {
                throw std::invalid_argument("element list is not closed under composition");
            }
            table_[a * k + b] = *idx;
            if (*idx == 0) {
                inverse_[a] = b;
            }
        }
    }
    int conductor = 1;
    for (const auto& g : elements_) {
        for (const auto& s : g.xi()) {
            conductor = std::lcm(conductor, s.field().conductor());
        }
    }
    field_ = &CyclotomicField::get(conductor);
}

std::optional<std::size_t> FiniteGroup::index_of(const Automorphism& g) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] == g) {
            return i;
        }
    }
    return std::nullopt;
}

bool FiniteGroup::has_scalars() const {
    return std::any_of(elements_.begin(), elements_.end(), [](const auto& g) { return g.has_scalars(); });
}

FiniteGroup generate_group(int n, const std::vector<Automorphism>& generators, std::size_t cap) {
    for (const auto& g : generators) {
        if (g.n() != n) {
            throw std::invalid_argument("generator acts on a different quiver");
        }
        validate(g);
    }
    std::vector<Automorphism> elements{Automorphism::identity(n)};
    std::deque<std::size_t> frontier{0};
    auto known = [&](const Automorphism& x) {
        return std::find(elements.begin(), elements.end(), x) != elements.end();
    };
    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop_front();
        for (const auto& s : generators) {
            Automorphism next = s * elements[at];
            if (known(next)) {
                continue;
            }
            if (elements.size() >= cap) {
                throw CapExceededError("group generated by the given maps has more than " + std::to_string(cap) +
                                       " elements");
            }
            elements.push_back(std::move(next));
            frontier.push_back(elements.size() - 1);
        }
    }
    return FiniteGroup(n, std::move(elements), generators);
}

std::vector<Automorphism> vertex_fixing_reflections(int n) {
    std::vector<Automorphism> out;
    for (int j = 0; j < n; ++j) {
        Automorphism t = Automorphism::reflection(n, j);
        if (!t.fixed_vertices().empty()) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

FiniteGroup dihedral_group(int n) {
    return generate_group(n, {Automorphism::rotation(n, 1), Automorphism::reflection(n, 0)});
}

FiniteGroup vertex_reflection_group(int n) {
    return generate_group(n, vertex_fixing_reflections(n));
}

bool contains_all_vertex_fixing_reflections(const FiniteGroup& g) {
    for (const auto& t : vertex_fixing_reflections(g.n())) {
        if (!g.index_of(t)) {
            return false;
        }
    }
    return true;
}

std::string SubgroupDescriptor::label() const {
    switch (kind) {
        case Kind::Cyclic:
            return "cyclic(" + std::to_string(d) + ")";
        case Kind::Dihedral:
            return "dihedral(" + std::to_string(d) + "," + std::to_string(j) + ")";
        case Kind::Scalar:
            return "scalar";
        case Kind::Mixed:
            return "mixed";
    }
    return "?";
}

SubgroupDescriptor describe(const FiniteGroup& g) {
    SubgroupDescriptor desc;
    if (g.has_scalars()) {
        const bool moves = std::any_of(g.elements().begin(), g.elements().end(),
                                       [](const auto& x) { return !x.is_dihedral_identity(); });
        desc.kind = moves ? SubgroupDescriptor::Kind::Mixed : SubgroupDescriptor::Kind::Scalar;
        desc.d = 0;
        return desc;
    }
    const int n = g.n();
    int rotations = 0;
    std::optional<int> refl_shift;
    for (const auto& x : g.elements()) {
        if (x.reflection()) {
            refl_shift = refl_shift ? std::min(*refl_shift, x.shift()) : x.shift();
        } else {
            ++rotations;
        }
    }
    desc.d = n / rotations;
    if (refl_shift) {
        desc.kind = SubgroupDescriptor::Kind::Dihedral;
        desc.j = *refl_shift % desc.d;
    }
    desc.contains_all_vertex_fixing_reflections = contains_all_vertex_fixing_reflections(g);
    return desc;
}

std::vector<Subgroup> enumerate_subgroups(int n) {
    QuiverA check(n);
    std::vector<Subgroup> out;
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) {
            divisors.push_back(d);
        }
    }
    for (int d : divisors) {
        std::vector<Automorphism> gens{Automorphism::rotation(n, d % n)};
        FiniteGroup g = generate_group(n, gens);
        out.push_back(Subgroup{describe(g), gens, std::move(g)});
    }
    for (int d : divisors) {
        for (int j = 0; j < d; ++j) {
            std::vector<Automorphism> gens{Automorphism::rotation(n, d % n), Automorphism::reflection(n, j)};
            FiniteGroup g = generate_group(n, gens);
            out.push_back(Subgroup{describe(g), gens, std::move(g)});
        }
    }
    // The parametrisation is meant to be irredundant; check it.
    for (std::size_t a = 0; a < out.size(); ++a) {
        for (std::size_t b = a + 1; b < out.size(); ++b) {
            const auto& ga = out[a].group;
            const auto& gb = out[b].group;
            if (ga.order() != gb.order()) {
                continue;
            }
            const bool same = std::all_of(ga.elements().begin(), ga.elements().end(),
                                          [&](const auto& x) { return gb.index_of(x).has_value(); });
            if (same) {
                throw std::logic_error("subgroup enumeration produced a duplicate: " + out[a].descriptor.label() +
                                       " = " + out[b].descriptor.label());
            }
        }
    }
    return out;
}

Verdict classify_auslander(int n, const FiniteGroup& g) {
    if (g.n() != n) {
        throw std::invalid_argument("group acts on a different quiver");
    }
    if (g.has_scalars()) {
        throw ScalarGroupNotClassifiable("closed-form classification only covers subgroups of D_n; use the empirical verdict");
    }
    return contains_all_vertex_fixing_reflections(g) ? Verdict::NotIso : Verdict::Iso;
}

}  // namespace auslab
