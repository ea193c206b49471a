#ifndef AUSLAB_SUITES_HPP
#define AUSLAB_SUITES_HPP

#include <string>
#include <vector>

namespace auslab {

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    int degree = 0;
    std::vector<SuiteCheck> checks;
    /// Reported but not gating (literal product rules known to fail).
    std::vector<SuiteCheck> flags;

    bool ok() const;
    void add(std::string name, bool pass, std::string detail = {});
};

/// Oracle dims n(d+1), NF monomials as an oracle basis, and closed-form
/// products against the oracle for total degree <= min(8, D).
SuiteReport verify_structure(int n, int max_degree);
/// Orbits of D_n (and W_n for even n) against B_{l,k}, plus invariant series.
SuiteReport verify_orbits(int n, int max_degree);
/// Orbit-sum relations.  The corrected O1 / WO1 forms gate; the literal ones are flags.
SuiteReport verify_relations(int n, int max_degree);
/// Smash product laws, ideal two-sidedness, verdict agreement and certificates.
SuiteReport verify_smash(int n, int max_degree);

}  // namespace auslab

#endif
