#ifndef AUSLAB_CLI_HPP
#define AUSLAB_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <auslab/smash.hpp>
#include <auslab/symmetry.hpp>

namespace auslab {

class GroupSpecError : public std::invalid_argument {
public:
    GroupSpecError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct GroupTerm {
    enum class Kind { Rot, Refl, Scalar };
    Kind kind = Kind::Rot;
    long long value = 0;  // rot / refl argument
    long long modulus = 1;  // scalar only
    std::vector<long long> exponents;
    std::vector<long long> star_exponents;
    std::size_t offset = 0;
};

struct GroupSpec {
    std::string text;
    int n = 0;
    std::vector<GroupTerm> terms;
    std::vector<Automorphism> generators;

    FiniteGroup group() const { return generate_group(n, generators); }
};

/*
 * spec := term (',' term)*
 * term := 'rot(' INT ')' | 'refl(' INT ')' | 'scalar(' INT ';' INTLIST ';' INTLIST ')'
 *
 * Whitespace is ignored.  Rotation / reflection arguments are reduced mod n,
 * scalar exponents mod their modulus.
 */
GroupSpec parse_group(const std::string& text, int n);
/// Canonical text; parse_group(print_group(s), n) reproduces s.
std::string print_group(const GroupSpec& spec);
std::string print_group(const FiniteGroup& g);

/// Report file: {"metadata": ..., "payload": ..., "schema_version": N}.
constexpr int kReportSchemaVersion = 1;

nlohmann::json make_report(const std::string& command, const nlohmann::json& payload, double seconds);
std::string payload_digest(const nlohmann::json& payload);
void write_text(const std::string& path, const std::string& text);

nlohmann::json to_json(const AuslanderReport& rep);

struct ScanRow {
    int n = 0;
    std::string descriptor;
    std::string spec;
    bool contains_all = false;
    AuslanderReport report;
};

/// One auslander_verdict per (n, subgroup of D_n); rows come back in a fixed order
/// regardless of the number of workers.
std::vector<ScanRow> run_scan(const std::vector<int>& ns, int degree, unsigned jobs);
/// Per-n default cutoff 4n+4 when degree < 0.
nlohmann::json scan_payload(const std::vector<ScanRow>& rows);
std::string scan_csv(const std::vector<ScanRow>& rows);

/// Entry point shared by the executable and the tests.  Returns the exit code:
/// 0 success, 1 usage error, 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace auslab

#endif
