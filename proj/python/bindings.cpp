#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <auslab/cli.hpp>
#include <auslab/invariants.hpp>
#include <auslab/preproj.hpp>
#include <auslab/smash.hpp>
#include <auslab/suites.hpp>

namespace py = pybind11;
using namespace auslab;

namespace {

py::object to_python(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

using Mono = std::tuple<int, int, int>;

NFMonomial from_tuple(const Preprojective& r, const Mono& m) {
    auto [i, l, k] = m;
    if (l < 0 || k < 0) {
        throw py::value_error("negative arrow count");
    }
    return r.canonical(NFMonomial{i, l, k});
}

Mono to_tuple(const NFMonomial& m) { return {m.source, m.nonstars, m.stars}; }

py::dict suite_dict(const SuiteReport& rep) {
    auto list = [](const std::vector<SuiteCheck>& checks) {
        py::list out;
        for (const auto& c : checks) {
            out.append(py::dict(py::arg("name") = c.name, py::arg("pass") = c.pass, py::arg("detail") = c.detail));
        }
        return out;
    };
    return py::dict(py::arg("suite") = rep.suite, py::arg("n") = rep.n, py::arg("degree") = rep.degree,
                    py::arg("ok") = rep.ok(), py::arg("checks") = list(rep.checks), py::arg("flags") = list(rep.flags));
}

}  // namespace

PYBIND11_MODULE(auslab, m) {
    m.doc() = "Preprojective algebras of type A~, dihedral symmetries and the Auslander map";

    py::register_exception<GroupSpecError>(m, "GroupSpecError", PyExc_ValueError);

    m.def("normal_form", [](int n, int source, const std::vector<std::pair<int, bool>>& arrows) {
        QuiverA q(n);
        Word w{q.wrap(source), {}};
        for (auto [index, starred] : arrows) {
            w.arrows.push_back(Arrow{q.wrap(index), starred});
        }
        if (!is_composable(q, w)) {
            throw py::value_error("arrows do not form a path");
        }
        return to_tuple(normal_form(q, w));
    }, py::arg("n"), py::arg("source"), py::arg("arrows"),
       "(source, #nonstars, #stars) of a path given as (index, starred) arrows.");

    m.def("multiply", [](int n, const Mono& a, const Mono& b) -> std::optional<Mono> {
        Preprojective r(n);
        auto p = r.multiply(from_tuple(r, a), from_tuple(r, b));
        if (!p) {
            return std::nullopt;
        }
        return to_tuple(*p);
    }, py::arg("n"), py::arg("a"), py::arg("b"), "Product of two NF monomials, or None.");

    m.def("hilbert", [](int n, int degree) {
        const auto rep = hilbert(QuiverA(n), degree);
        return py::dict(py::arg("total") = rep.total, py::arg("matrix") = rep.matrix);
    }, py::arg("n"), py::arg("degree") = 12, "Oracle Hilbert series, total and matrix valued.");

    m.def("parse_group", [](const std::string& spec, int n) {
        const auto g = parse_group(spec, n);
        return py::dict(py::arg("spec") = print_group(g), py::arg("order") = g.group().order(),
                        py::arg("descriptor") = describe(g.group()).label());
    }, py::arg("spec"), py::arg("n"));

    m.def("subgroups", [](int n) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& s : enumerate_subgroups(n)) {
            out.emplace_back(s.descriptor.label(), print_group(s.group));
        }
        return out;
    }, py::arg("n"), "(descriptor, generator spec) for every subgroup of D_n.");

    m.def("classify", [](int n, const std::string& spec) {
        return to_string(classify_auslander(n, parse_group(spec, n).group()));
    }, py::arg("n"), py::arg("spec"));

    m.def("invariant_dims", [](int n, const std::string& spec, int degree) {
        Preprojective r(n);
        const auto g = parse_group(spec, n).group();
        return InvariantBasis(r, g, degree).dims();
    }, py::arg("n"), py::arg("spec"), py::arg("degree"));

    m.def("identity_component_dims", [](int n, const std::string& spec, int degree) {
        Preprojective r(n);
        const auto g = parse_group(spec, n).group();
        py::gil_scoped_release release;
        return identity_component_dims(r, g, degree);
    }, py::arg("n"), py::arg("spec"), py::arg("degree"));

    m.def("auslander", [](int n, const std::string& spec, std::optional<int> degree) {
        const auto g = parse_group(spec, n).group();
        AuslanderReport rep;
        {
            py::gil_scoped_release release;
            rep = auslander_verdict(n, g, degree.value_or(default_auslander_degree(n, g)));
        }
        return to_python(to_json(rep));
    }, py::arg("n"), py::arg("spec"), py::arg("degree") = py::none(), "Empirical Auslander verdict as a dict.");

    m.def("scan", [](const std::vector<int>& ns, int degree, unsigned jobs) {
        std::vector<ScanRow> rows;
        {
            py::gil_scoped_release release;
            rows = run_scan(ns, degree, jobs);
        }
        return to_python(scan_payload(rows));
    }, py::arg("ns"), py::arg("degree") = -1, py::arg("jobs") = 1, "Scan payload; degree -1 means 4n+4 per n.");

    m.def("verify", [](const std::string& suite, int n, int degree) {
        SuiteReport rep;
        {
            py::gil_scoped_release release;
            if (suite == "structure") {
                rep = verify_structure(n, degree);
            } else if (suite == "orbits") {
                rep = verify_orbits(n, degree);
            } else if (suite == "relations") {
                rep = verify_relations(n, degree);
            } else if (suite == "smash") {
                rep = verify_smash(n, degree);
            } else {
                throw std::invalid_argument("unknown suite '" + suite + "'");
            }
        }
        return suite_dict(rep);
    }, py::arg("suite"), py::arg("n"), py::arg("degree") = 12);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line tool in-process: (exit code, stdout, stderr).");

    m.attr("REPORT_SCHEMA_VERSION") = kReportSchemaVersion;
}
