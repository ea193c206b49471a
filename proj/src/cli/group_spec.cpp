#include <auslab/cli.hpp>

#include <cctype>
#include <numeric>

namespace auslab {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    std::vector<GroupTerm> spec() {
        std::vector<GroupTerm> terms;
        terms.push_back(term());
        while (peek() == ',') {
            ++pos_;
            terms.push_back(term());
        }
        skip();
        if (pos_ != text_.size()) {
            throw GroupSpecError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        return terms;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) {
            throw GroupSpecError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    long long integer() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            ++pos_;
        }
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == digits) {
            throw GroupSpecError("expected an integer", start);
        }
        if (pos_ - digits > 12) {
            throw GroupSpecError("integer out of range", start);
        }
        return std::stoll(text_.substr(start, pos_ - start));
    }

    std::vector<long long> list() {
        std::vector<long long> out{integer()};
        while (peek() == ',') {
            ++pos_;
            out.push_back(integer());
        }
        return out;
    }

    GroupTerm term() {
        skip();
        GroupTerm t;
        t.offset = pos_;
        std::size_t end = pos_;
        while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) {
            ++end;
        }
        const std::string word = text_.substr(pos_, end - pos_);
        if (word == "rot") {
            t.kind = GroupTerm::Kind::Rot;
        } else if (word == "refl") {
            t.kind = GroupTerm::Kind::Refl;
        } else if (word == "scalar") {
            t.kind = GroupTerm::Kind::Scalar;
        } else {
            throw GroupSpecError("expected rot, refl or scalar", pos_);
        }
        pos_ = end;
        expect('(');
        if (t.kind == GroupTerm::Kind::Scalar) {
            t.modulus = integer();
            expect(';');
            t.exponents = list();
            expect(';');
            t.star_exponents = list();
        } else {
            t.value = integer();
        }
        expect(')');
        return t;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

long long mod(long long a, long long m) {
    return ((a % m) + m) % m;
}

}  // namespace

GroupSpec parse_group(const std::string& text, int n) {
    QuiverA check(n);
    GroupSpec spec;
    spec.text = text;
    spec.n = n;
    spec.terms = Parser(text).spec();

    long long conductor = 1;
    for (auto& t : spec.terms) {
        if (t.kind != GroupTerm::Kind::Scalar) {
            t.value = mod(t.value, n);
            continue;
        }
        if (t.modulus <= 0) {
            throw GroupSpecError("zero scalar: root-of-unity order must be positive", t.offset);
        }
        if (t.modulus > 10000) {
            throw GroupSpecError("root-of-unity order too large", t.offset);
        }
        if (t.exponents.size() != static_cast<std::size_t>(n) || t.star_exponents.size() != static_cast<std::size_t>(n)) {
            throw GroupSpecError("scalar term needs " + std::to_string(n) + " exponents per arrow family, got " +
                                     std::to_string(t.exponents.size()) + " and " +
                                     std::to_string(t.star_exponents.size()),
                                 t.offset);
        }
        for (auto& e : t.exponents) {
            e = mod(e, t.modulus);
        }
        for (auto& e : t.star_exponents) {
            e = mod(e, t.modulus);
        }
        conductor = std::lcm(conductor, t.modulus);
    }
    const CyclotomicField& field = CyclotomicField::get(static_cast<int>(conductor));
    for (const auto& t : spec.terms) {
        switch (t.kind) {
            case GroupTerm::Kind::Rot:
                spec.generators.push_back(Automorphism::rotation(n, static_cast<int>(t.value)));
                break;
            case GroupTerm::Kind::Refl:
                spec.generators.push_back(Automorphism::reflection(n, static_cast<int>(t.value)));
                break;
            case GroupTerm::Kind::Scalar: {
                const long long scale = conductor / t.modulus;
                std::vector<Scalar> xi;
                std::vector<Scalar> xs;
                for (int i = 0; i < n; ++i) {
                    xi.push_back(make_root_of_unity(field, t.exponents[static_cast<std::size_t>(i)] * scale));
                    xs.push_back(make_root_of_unity(field, t.star_exponents[static_cast<std::size_t>(i)] * scale));
                }
                Automorphism a = Automorphism::diagonal(n, xi, xs);
                try {
                    validate(a);
                } catch (const NotAnAutomorphismError& e) {
                    throw GroupSpecError(std::string("not an automorphism (") + e.what() + ")", t.offset);
                }
                spec.generators.push_back(std::move(a));
                break;
            }
        }
    }
    return spec;
}

std::string print_group(const GroupSpec& spec) {
    std::string out;
    auto join = [](const std::vector<long long>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i ? "," : "") + std::to_string(v[i]);
        }
        return s;
    };
    for (const auto& t : spec.terms) {
        if (!out.empty()) {
            out += ",";
        }
        switch (t.kind) {
            case GroupTerm::Kind::Rot:
                out += "rot(" + std::to_string(t.value) + ")";
                break;
            case GroupTerm::Kind::Refl:
                out += "refl(" + std::to_string(t.value) + ")";
                break;
            case GroupTerm::Kind::Scalar:
                out += "scalar(" + std::to_string(t.modulus) + ";" + join(t.exponents) + ";" +
                       join(t.star_exponents) + ")";
                break;
        }
    }
    return out;
}

std::string print_group(const FiniteGroup& g) {
    const int n = g.n();
    std::string out;
    for (const auto& a : g.generators()) {
        if (!out.empty()) {
            out += ",";
        }
        if (!a.has_scalars()) {
            out += a.reflection() ? "refl(" + std::to_string(a.shift()) + ")" : "rot(" + std::to_string(a.shift()) + ")";
            continue;
        }
        if (!a.is_dihedral_identity()) {
            throw std::invalid_argument("generator mixes a vertex permutation with scalars: " + a.str());
        }
        // exponents of zeta_L, L the conductor of the scalar field (zeta_2 = -1 over Q)
        const CyclotomicField* widest = &CyclotomicField::rationals();
        for (const auto& s : a.xi()) {
            if (s.field().conductor() > widest->conductor()) {
                widest = &s.field();
            }
        }
        const CyclotomicField& field = *widest;
        const int m = field.conductor() == 1 ? 2 : field.conductor();
        auto exponent = [&](const Scalar& s) {
            for (int e = 0; e < m; ++e) {
                const Scalar z = field.conductor() == 1 ? Scalar(e == 0 ? 1 : -1) : make_root_of_unity(field, e);
                if (z == s) {
                    return e;
                }
            }
            throw std::invalid_argument("arrow scalar is not a power of zeta_" + std::to_string(m) + ": " + s.str());
        };
        std::string first;
        std::string second;
        for (int i = 0; i < n; ++i) {
            first += (i ? "," : "") + std::to_string(exponent(a.xi(Arrow{i, false})));
            second += (i ? "," : "") + std::to_string(exponent(a.xi(Arrow{i, true})));
        }
        out += "scalar(" + std::to_string(m) + ";" + first + ";" + second + ")";
    }
    return out.empty() ? "rot(0)" : out;
}

}  // namespace auslab
