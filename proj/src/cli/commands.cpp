#include <auslab/cli.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include <auslab/invariants.hpp>
#include <auslab/preproj.hpp>
#include <auslab/suites.hpp>

namespace auslab {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<int> env_degree() {
    const char* v = std::getenv("AUSLAB_DEFAULT_DEGREE");
    if (v == nullptr || *v == '\0') {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const int d = std::stoi(v, &used);
        if (used != std::string(v).size() || d < 0) {
            throw std::invalid_argument(v);
        }
        return d;
    } catch (const std::exception&) {
        throw UsageError(std::string("AUSLAB_DEFAULT_DEGREE must be a non-negative integer, got '") + v + "'");
    }
}

int pick_degree(int given, int fallback) {
    if (given >= 0) {
        return given;
    }
    return env_degree().value_or(fallback);
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order() == b.order() && std::all_of(a.elements().begin(), a.elements().end(),
                                                 [&](const auto& x) { return b.index_of(x).has_value(); });
}

bool preserves_parity(const FiniteGroup& g) {
    for (const auto& x : g.elements()) {
        for (int v = 0; v < g.n(); ++v) {
            if (x.vertex_image(v) % 2 != v % 2) {
                return false;
            }
        }
    }
    return true;
}

json matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        out.push_back(row);
    }
    return out;
}

json suite_json(const SuiteReport& s) {
    auto list = [](const std::vector<SuiteCheck>& checks) {
        json out = json::array();
        for (const auto& c : checks) {
            json j{{"name", c.name}, {"pass", c.pass}};
            if (!c.detail.empty()) {
                j["detail"] = c.detail;
            }
            out.push_back(std::move(j));
        }
        return out;
    };
    return json{{"suite", s.suite}, {"n", s.n},         {"degree", s.degree},
                {"ok", s.ok()},     {"checks", list(s.checks)}, {"flags", list(s.flags)}};
}

struct Emitter {
    std::ostream& out;
    std::string path;

    void emit(const std::string& command, const json& payload, double seconds, const std::string& summary) const {
        const json report = make_report(command, payload, seconds);
        if (path.empty()) {
            out << report.dump(2) << '\n';
        } else {
            write_text(path, report.dump(2) + "\n");
            out << summary << '\n' << "report written to " << path << '\n';
        }
    }
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_hilbert(int n, int degree, bool matrix, const Emitter& em) {
    const auto t0 = std::chrono::steady_clock::now();
    const int d = pick_degree(degree, 12);
    const QuiverA q(n);
    const HilbertReport h = hilbert(q, d);
    const auto fail = first_recurrence_failure(h, q.adjacency());
    const bool totals = std::all_of(h.total.begin(), h.total.end(), [&, i = 0](std::int64_t v) mutable {
        return v == static_cast<std::int64_t>(n) * (i++ + 1);
    });
    const bool inverse_square = inverse_square_series(q.adjacency(), d) == h.matrix;
    json p{{"command", "hilbert"},
           {"n", n},
           {"degree", d},
           {"total", h.total},
           {"total_matches_n_times_d_plus_1", totals},
           {"recurrence_holds", !fail},
           {"first_recurrence_failure", fail ? json(*fail) : json(nullptr)},
           {"inverse_square_series_matches", inverse_square}};
    if (matrix) {
        json ms = json::array();
        for (const auto& m : h.matrix) {
            ms.push_back(matrix_json(m));
        }
        p["matrix"] = ms;
    }
    const bool ok = totals && !fail;
    em.emit("hilbert", p, since(t0),
            "hilbert n=" + std::to_string(n) + " through degree " + std::to_string(d) + ": " +
                (ok ? "dims n(d+1), recurrence holds" : "FAILED") +
                (inverse_square ? "" : "; (I - M t)^{-2} does not match the oracle series (flagged)"));
    return ok ? kOk : kFailed;
}

int cmd_invariants(int n, const std::string& spec_text, int degree, bool presentation, bool free_module,
                   const Emitter& em) {
    const auto t0 = std::chrono::steady_clock::now();
    const int d = pick_degree(degree, default_truncation(n));
    const GroupSpec spec = parse_group(spec_text, n);
    const FiniteGroup g = spec.group();
    const Preprojective r(n);
    const InvariantBasis inv(r, g, d);
    json p{{"command", "invariants"},
           {"n", n},
           {"group", print_group(spec)},
           {"order", g.order()},
           {"degree", d},
           {"dims", inv.dims()}};
    if (n % 2 == 0 && preserves_parity(g)) {
        json blocks = json::array();
        for (int k = 0; k <= d; ++k) {
            const auto b = inv.parity_block_dims(k);
            blocks.push_back(json::array({json::array({b[0][0], b[0][1]}), json::array({b[1][0], b[1][1]})}));
        }
        p["parity_block_dims"] = blocks;
    }
    bool ok = true;
    std::optional<PresentationTarget> target;
    if (same_group(g, dihedral_group(n))) {
        target = PresentationTarget::PolynomialTwoVars;
    } else if (n % 2 == 0 && same_group(g, vertex_reflection_group(n))) {
        target = PresentationTarget::TwoVertexQuiver;
    }
    if ((presentation || free_module) && !target) {
        throw UsageError("presentation and free-module checks cover G = D_n and G = W_n (n even) only");
    }
    if (presentation) {
        const PresentationReport pr = verify_presentation(n, *target, d);
        json degs = json::array();
        for (const auto& c : pr.degrees) {
            degs.push_back(json{{"degree", c.degree},
                                {"presented_dim", c.source_dim},
                                {"image_rank", c.image_rank},
                                {"invariant_dim", c.invariant_dim},
                                {"series", c.expected_dim},
                                {"ok", c.ok}});
        }
        p["presentation"] = json{{"target", to_string(pr.target)},
                                 {"well_defined", pr.well_defined},
                                 {"bijective_through", pr.bijective_through},
                                 {"degrees", degs},
                                 {"failures", pr.failures}};
        ok = ok && pr.ok();
    }
    if (free_module) {
        for (const auto& mr : {verify_free_module(r, g, d), verify_shift_summand(r, g, d)}) {
            json degs = json::array();
            for (const auto& c : mr.degrees) {
                degs.push_back(json{{"degree", c.degree},
                                    {"summand_dims", c.parts},
                                    {"rank", c.rank},
                                    {"expected", c.expected},
                                    {"ok", c.ok}});
            }
            p[mr.name] = json{{"ok", mr.ok()}, {"degrees", degs}};
            ok = ok && mr.ok();
        }
    }
    std::string dims;
    for (auto x : inv.dims()) {
        dims += (dims.empty() ? "" : " ") + std::to_string(x);
    }
    em.emit("invariants", p, since(t0), "dim (R^G)_d: " + dims + (ok ? "" : "\nverification FAILED"));
    return ok ? kOk : kFailed;
}

int cmd_auslander(int n, const std::string& spec_text, int degree, const Emitter& em) {
    const auto t0 = std::chrono::steady_clock::now();
    const GroupSpec spec = parse_group(spec_text, n);
    const FiniteGroup g = spec.group();
    const int d = pick_degree(degree, default_auslander_degree(n, g));
    const AuslanderReport rep = auslander_verdict(n, g, d);
    json p = to_json(rep);
    p["command"] = "auslander";
    p["generators"] = print_group(spec);
    const Preprojective r(n);
    IdealTruncation ideal(r, g);
    bool certs_ok = true;
    json certs = json::array();
    const bool special = same_group(g, dihedral_group(n)) || (n % 2 == 0 && same_group(g, vertex_reflection_group(n)));
    if (special) {
        const PathDifferenceCertificate c = path_difference_certificate(r, g, ideal);
        certs.push_back(json{{"name", c.membership.name},
                             {"in_ideal", c.membership.in_ideal},
                             {"equals_p_f1_minus_f1_q", c.factorisation_holds}});
        certs_ok = certs_ok && c.membership.in_ideal && c.factorisation_holds;
    }
    for (const auto& c : scalar_certificates(r, g, ideal)) {
        certs.push_back(json{{"name", c.name}, {"in_ideal", c.in_ideal}});
        certs_ok = certs_ok && c.in_ideal;
    }
    p["certificates"] = certs;
    const bool ok = rep.agree != false && certs_ok;
    std::string summary = "verdict " + to_string(rep.verdict) + ", growth " + to_string(rep.growth.kind) +
                          ", pertinency " + (rep.pertinency ? std::to_string(*rep.pertinency) : "unknown");
    if (rep.classifier) {
        summary += ", classifier " + to_string(*rep.classifier) + (*rep.agree ? " (agrees)" : " (DISAGREES)");
    }
    if (!rep.note.empty()) {
        summary += "\n" + rep.note;
    }
    em.emit("auslander", p, since(t0), summary);
    return ok ? kOk : kFailed;
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v < 3) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--n-list entries must be integers >= 3, got '" + item + "'");
        }
        pos = comma + 1;
    }
    return out;
}

int cmd_scan(const std::string& n_list, bool all, int degree, const std::string& out_dir, unsigned jobs,
             std::ostream& out) {
    if (!all) {
        throw UsageError("scan needs --all-dihedral-subgroups");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> ns = parse_n_list(n_list);
    const int d = degree >= 0 ? degree : env_degree().value_or(-1);
    const auto rows = run_scan(ns, d, jobs);
    json payload = scan_payload(rows);
    payload["degree"] = d >= 0 ? json(d) : json("4n+4");
    payload["n_list"] = ns;
    const json report = make_report("scan", payload, since(t0));
    std::filesystem::create_directories(out_dir);
    const std::string json_path = (std::filesystem::path(out_dir) / "scan.json").string();
    const std::string csv_path = (std::filesystem::path(out_dir) / "scan.csv").string();
    write_text(json_path, report.dump(2) + "\n");
    write_text(csv_path, scan_csv(rows));
    std::size_t bad = payload["disagreements"].get<std::size_t>();
    out << scan_csv(rows) << rows.size() << " subgroups, " << bad << " disagreements\n"
        << "wrote " << json_path << " and " << csv_path << '\n';
    return bad == 0 ? kOk : kFailed;
}

int cmd_verify(const std::string& suite, int n, int degree, const Emitter& em) {
    const auto t0 = std::chrono::steady_clock::now();
    const int d = pick_degree(degree, 12);
    SuiteReport rep;
    if (suite == "structure") {
        rep = verify_structure(n, d);
    } else if (suite == "orbits") {
        rep = verify_orbits(n, d);
    } else if (suite == "relations") {
        rep = verify_relations(n, d);
    } else if (suite == "smash") {
        rep = verify_smash(n, d);
    } else {
        throw UsageError("unknown suite " + suite);
    }
    json p = suite_json(rep);
    p["command"] = "verify";
    std::string summary;
    for (const auto& c : rep.checks) {
        if (!c.pass) {
            summary += "FAIL " + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
        }
    }
    summary += suite + " n=" + std::to_string(n) + " degree " + std::to_string(d) + ": " +
               std::to_string(rep.checks.size()) + " checks, " + (rep.ok() ? "all pass" : "FAILED") + ", " +
               std::to_string(rep.flags.size()) + " flagged";
    em.emit("verify", p, since(t0), summary);
    return rep.ok() ? kOk : kFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Auslander map computations for preprojective algebras of type A~", "auslab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "auslab 0.1.0");

    int n = 3;
    int degree = -1;
    std::string out_path;
    std::string group = "rot(1)";

    auto* hil = app.add_subcommand("hilbert", "oracle Hilbert series of R");
    bool matrix = false;
    hil->add_option("--n", n, "number of vertices")->required()->check(CLI::Range(3, 64));
    hil->add_option("--degree", degree, "truncation degree")->check(CLI::Range(0, 24));
    hil->add_flag("--matrix", matrix, "include the matrix-valued series");
    hil->add_option("--out", out_path, "report file");

    auto* inv = app.add_subcommand("invariants", "invariant ring R^G");
    bool presentation = false;
    bool free_module = false;
    inv->add_option("--n", n)->required()->check(CLI::Range(3, 64));
    inv->add_option("--group", group, "group spec")->required();
    inv->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
    inv->add_flag("--check-presentation", presentation);
    inv->add_flag("--check-free-module", free_module);
    inv->add_option("--out", out_path);

    auto* aus = app.add_subcommand("auslander", "empirical Auslander verdict");
    aus->add_option("--n", n)->required()->check(CLI::Range(3, 64));
    aus->add_option("--group", group)->required();
    aus->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
    aus->add_option("--out", out_path);

    auto* scan = app.add_subcommand("scan", "verdicts for every subgroup of D_n");
    std::string n_list = "3,4,5,6";
    bool all = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    scan->add_option("--n-list", n_list);
    scan->add_flag("--all-dihedral-subgroups", all);
    scan->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
    scan->add_option("--out", out_path, "output directory")->required();
    scan->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

    auto* ver = app.add_subcommand("verify", "verification suites");
    std::string suite;
    ver->add_option("--suite", suite)->required()->check(CLI::IsMember({"structure", "orbits", "relations", "smash"}));
    ver->add_option("--n", n)->required()->check(CLI::Range(3, 64));
    ver->add_option("--degree", degree)->check(CLI::Range(0, 24));
    ver->add_option("--out", out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const Emitter em{out, out_path};
    try {
        if (*hil) {
            return cmd_hilbert(n, degree, matrix, em);
        }
        if (*inv) {
            return cmd_invariants(n, group, degree, presentation, free_module, em);
        }
        if (*aus) {
            return cmd_auslander(n, group, degree, em);
        }
        if (*scan) {
            return cmd_scan(n_list, all, degree, out_path, jobs, out);
        }
        if (*ver) {
            return cmd_verify(suite, n, degree, em);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const GroupSpecError& e) {
        err << "error: bad --group: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}

}  // namespace auslab
