#ifndef AUSLAB_SYMMETRY_HPP
#define AUSLAB_SYMMETRY_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <auslab/automorphism.hpp>
#include <auslab/preproj.hpp>

namespace auslab {

class NotAnAutomorphismError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ScalarGroupNotClassifiable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class AutomorphismKind { StarPreserving, StarInverting, ScalarDiag };

std::string to_string(AutomorphismKind kind);

struct Validation {
    AutomorphismKind kind;
    /// sigma(Omega) = omega * Omega; for vertex-fixing maps this is the
    /// homological determinant xi_i xi_i^*.
    Scalar omega;
};

/// Applies g to Omega in the free algebra and checks that the result is a
/// multiple of Omega.  Throws NotAnAutomorphismError naming the first vertex
/// component e_j Omega e_j that breaks proportionality.
Validation validate(const Automorphism& g);

/// Closed-form action on a monomial: (scalar, image monomial).
std::pair<Scalar, NFMonomial> apply(const Preprojective& r, const Automorphism& g, const NFMonomial& m);
AlgebraElement apply(const Preprojective& r, const Automorphism& g, const AlgebraElement& x);

/// A finite group of automorphisms closed under composition; element 0 is the identity.
class FiniteGroup {
public:
    FiniteGroup(int n, std::vector<Automorphism> elements, std::vector<Automorphism> generators);

    int n() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Automorphism>& elements() const { return elements_; }
    const Automorphism& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<Automorphism>& generators() const { return generators_; }

    static constexpr std::size_t identity() { return 0; }
    /// Index of elements[a] * elements[b] (apply b first).
    std::size_t product(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::optional<std::size_t> index_of(const Automorphism& g) const;

    bool has_scalars() const;
    /// Smallest cyclotomic field holding every arrow scalar.
    const CyclotomicField& field() const { return *field_; }

private:
    int n_;
    std::vector<Automorphism> elements_;
    std::vector<Automorphism> generators_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    const CyclotomicField* field_;
};

/// Closure of the generators under composition.  Throws CapExceededError
/// once more than `cap` elements appear.
FiniteGroup generate_group(int n, const std::vector<Automorphism>& generators, std::size_t cap = 4096);

std::vector<Automorphism> vertex_fixing_reflections(int n);
FiniteGroup dihedral_group(int n);
/// Subgroup generated by the reflections that fix a vertex.
FiniteGroup vertex_reflection_group(int n);
bool contains_all_vertex_fixing_reflections(const FiniteGroup& g);

struct SubgroupDescriptor {
    enum class Kind { Cyclic, Dihedral, Scalar, Mixed };
    Kind kind = Kind::Cyclic;
    int d = 1;  // rotation subgroup <rho^d>
    int j = 0;  // reflection rho^j r, dihedral kinds only
    bool contains_all_vertex_fixing_reflections = false;

    std::string label() const;
};

/// Identifies a finite group as one of the dihedral-subgroup shapes, or as
/// scalar / mixed when arrow scalars are present.
SubgroupDescriptor describe(const FiniteGroup& g);

struct Subgroup {
    SubgroupDescriptor descriptor;
    std::vector<Automorphism> generators;
    FiniteGroup group;
};

/// All subgroups of D_n: <rho^d> for d | n, then <rho^d, rho^j r> for d | n, 0 <= j < d.
std::vector<Subgroup> enumerate_subgroups(int n);

enum class Verdict { Iso, NotIso, Unknown };
std::string to_string(Verdict v);

/// Iso iff some vertex-fixing reflection of D_n lies outside G.
Verdict classify_auslander(int n, const FiniteGroup& g);

}  // namespace auslab

#endif
