#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <auslab/cli.hpp>
#include <auslab/invariants.hpp>
#include <auslab/preproj.hpp>
#include <auslab/smash.hpp>
#include <auslab/suites.hpp>

using namespace auslab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (pass) {
                note << what;
            }
            pass = false;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0) {
        std::ostringstream what;
        what << "runtime " << secs << "s over budget " << budget_seconds << "s";
        o.require(secs <= budget_seconds, what.str());
    }
    failures += !o.pass;
    std::printf("[%s] %d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.pass ? "" : ": ",
                o.note.str().c_str());
    std::fflush(stdout);
}

std::string tag(int n, int d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

FiniteGroup diagonal_group(int n, const std::vector<Scalar>& xi, const std::vector<Scalar>& xi_star) {
    return generate_group(n, {Automorphism::diagonal(n, xi, xi_star)});
}

}  // namespace

int main() {
    const std::vector<int> ns = {3, 4, 5, 6};

    criterion(1, "structure/oracle equivalence", 120, [&](Outcome& o) {
        for (int n : ns) {
            Preprojective r(n);
            RelationOracle oracle(r.quiver());
            oracle.extend_to(12);
            for (int d = 0; d <= 12; ++d) {
                o.require(oracle.quotient_dimension(d) == r.dimension(d), "dim R_d " + tag(n, d));
                SparseRref<Rational> span(oracle.free_dimension(d));
                for (const auto& m : r.basis(d)) {
                    span.insert(oracle.reduce(r.representative(m)));
                }
                o.require(span.rank() == r.dimension(d), "NF basis " + tag(n, d));
            }
            for (int da = 0; da <= 8; ++da) {
                for (int db = 0; da + db <= 8; ++db) {
                    for (const auto& a : r.basis(da)) {
                        for (const auto& b : r.basis(db)) {
                            const auto word = compose(r.quiver(), r.representative(a), r.representative(b));
                            const auto prod = r.multiply(a, b);
                            bool same = word.has_value() == prod.has_value();
                            if (same && word) {
                                same = oracle.reduce(*word) == oracle.reduce(r.representative(*prod));
                            }
                            o.require(same, "product " + r.name(a) + " * " + r.name(b));
                        }
                    }
                }
            }
        }
    });

    criterion(2, "matrix Hilbert recurrence", 0, [&](Outcome& o) {
        for (int n : ns) {
            QuiverA q(n);
            const auto rep = hilbert(q, 12);
            o.require(!first_recurrence_failure(rep, q.adjacency()).has_value(), "recurrence n=" + std::to_string(n));
            const auto series = inverse_square_series(q.adjacency(), 12);
            bool matches = true;
            for (int d = 0; d <= 12; ++d) {
                matches = matches && series[d] == rep.matrix[d];
            }
            // the inverse-square form is reported, never gating
            const auto suite = verify_structure(n, 12);
            bool flagged = false;
            for (const auto& f : suite.flags) {
                flagged = flagged || f.pass == matches;
            }
            o.require(flagged, "inverse-square flag missing n=" + std::to_string(n));
            o.require(suite.ok(), "structure suite n=" + std::to_string(n));
        }
    });

    criterion(3, "invariant Hilbert series", 0, [&](Outcome& o) {
        for (int n : ns) {
            Preprojective r(n);
            InvariantBasis inv(r, dihedral_group(n), 20);
            for (int d = 0; d <= 20; ++d) {
                o.require(inv.dimension(d) == two_var_series(d), "R^{D_n} " + tag(n, d));
            }
        }
        for (int n : {4, 6}) {
            Preprojective r(n);
            InvariantBasis inv(r, vertex_reflection_group(n), 20);
            for (int d = 0; d <= 20; ++d) {
                const std::size_t s = two_var_series(d);
                o.require(inv.dimension(d) == 2 * s, "R^{W_n} total " + tag(n, d));
                const auto b = inv.parity_block_dims(d);
                const std::size_t diag = d % 2 == 0 ? s : 0;
                const std::size_t off = d % 2 == 0 ? 0 : s;
                o.require(b[0][0] == diag && b[1][1] == diag && b[0][1] == off && b[1][0] == off,
                          "R^{W_n} parity blocks " + tag(n, d));
            }
        }
    });

    criterion(4, "orbit-sum relations as stated", 0, [&](Outcome& o) {
        std::ostringstream counts;
        std::string first;
        for (int n : ns) {
            const auto rep = check_orbit_sum_relations(n, 12);
            std::size_t failed = 0, total = 0;
            for (const auto& c : rep.checks) {
                total += c.as_stated;
                failed += c.as_stated && !c.holds;
            }
            counts << (n == ns.front() ? "" : ", ") << "n=" << n << ": " << failed << "/" << total;
            if (const auto* f = rep.first_failure(true); f != nullptr && first.empty()) {
                first = "n=" + std::to_string(n) + " " + f->name + " has lhs " + f->lhs;
            }
        }
        o.require(first.empty(), "instances failing (" + counts.str() + "); first: " + first);
    });

    criterion(5, "subgroup scan against the classifier", 900, [&](Outcome& o) {
        const auto rows = run_scan(ns, -1, jobs());
        for (const auto& row : rows) {
            const auto& rep = row.report;
            const std::string who = "n=" + std::to_string(row.n) + " " + row.descriptor;
            o.require(rep.degree == 4 * row.n + 4, who + " cutoff");
            o.require(rep.classifier.has_value() && rep.verdict == *rep.classifier, who + " verdict mismatch");
            o.require((rep.verdict == Verdict::NotIso) == row.contains_all, who + " NotIso iff all reflections");
            if (rep.verdict == Verdict::Iso) {
                o.require(rep.growth.first_zero_degree >= 0 && rep.growth.first_zero_degree <= 2 * row.n + 1,
                          who + " zero tail starts late");
            }
        }
    });

    criterion(6, "pertinency 1 for D_n and W_n", 0, [&](Outcome& o) {
        auto check = [&](int n, const FiniteGroup& g, const std::string& name) {
            const int D = 4 * n + 4;
            const auto rep = auslander_verdict(n, g, D);
            const auto& dims = rep.growth.dims;
            bool nonzero = false;
            for (int d = 2 * n + 2; d <= D; ++d) {
                nonzero = nonzero || dims[d] != 0;
            }
            o.require(nonzero, name + " tail vanishes");
            o.require(rep.growth.kind == GrowthKind::GK1 && rep.growth.tail_max <= rep.growth.previous_max,
                      name + " tail unbounded");
            o.require(rep.pertinency == 1, name + " pertinency");
            Preprojective r(n);
            IdealTruncation ideal(r, g);
            const auto cert = path_difference_certificate(r, g, ideal);
            o.require(cert.membership.in_ideal && cert.factorisation_holds, name + " (p-q)#1 certificate");
        };
        for (int n : {3, 4, 5}) {
            check(n, dihedral_group(n), "D_" + std::to_string(n));
        }
        for (int n : {4, 6}) {
            check(n, vertex_reflection_group(n), "W_" + std::to_string(n));
        }
    });

    criterion(7, "scalar actions", 0, [&](Outcome& o) {
        const auto& q4 = CyclotomicField::get(4);
        const Scalar m1(-1), one(1), i = make_root_of_unity(q4, 1), i3 = make_root_of_unity(q4, 3);
        struct Case {
            std::string name;
            int expected_case;
            FiniteGroup g;
        };
        std::vector<Case> cases;
        cases.push_back({"m=2 all -1", 1, diagonal_group(3, {m1, m1, m1}, {m1, m1, m1})});
        cases.push_back({"m=4 all zeta_4", 1, diagonal_group(3, {i, i, i}, {i3, i3, i3})});
        cases.push_back({"xi=(1,1,-1)", 2, diagonal_group(3, {one, one, m1}, {one, one, m1})});
        for (const auto& c : cases) {
            o.require(scalar_case(c.g) == c.expected_case, c.name + " case");
            const int m = static_cast<int>(c.g.order());
            const auto rep = auslander_verdict(3, c.g, 4 * m * 3 + 2);
            o.require(rep.growth.kind == GrowthKind::FiniteDim, c.name + " not finite dimensional");
            o.require(rep.verdict == Verdict::Iso, c.name + " verdict");
            Preprojective r(3);
            IdealTruncation ideal(r, c.g);
            const auto certs = scalar_certificates(r, c.g, ideal);
            o.require(!certs.empty(), c.name + " no certificate");
            for (const auto& cert : certs) {
                o.require(cert.in_ideal, c.name + " " + cert.name);
            }
        }
    });

    criterion(8, "presentations and freeness", 0, [&](Outcome& o) {
        o.require(verify_presentation(3, PresentationTarget::PolynomialTwoVars, 16).ok(), "D_3 presentation");
        o.require(verify_presentation(4, PresentationTarget::PolynomialTwoVars, 16).ok(), "D_4 presentation");
        o.require(verify_presentation(4, PresentationTarget::TwoVertexQuiver, 16).ok(), "W_4 presentation");
        Preprojective r3(3), r4(4);
        o.require(verify_free_module(r3, dihedral_group(3), 12).ok(), "D_3 free module");
        o.require(verify_shift_summand(r3, dihedral_group(3), 12).ok(), "D_3 shift summand");
        o.require(verify_free_module(r4, vertex_reflection_group(4), 12).ok(), "W_4 free module");
        o.require(verify_shift_summand(r4, vertex_reflection_group(4), 12).ok(), "W_4 shift summand");
    });

    criterion(9, "determinism of the full scan", 0, [&](Outcome& o) {
        const auto a = scan_payload(run_scan(ns, -1, jobs())).dump();
        const auto b = scan_payload(run_scan(ns, -1, jobs())).dump();
        o.require(a == b, "payloads differ");
        o.require(payload_digest(nlohmann::json::parse(a)) == payload_digest(nlohmann::json::parse(b)), "digests differ");
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
