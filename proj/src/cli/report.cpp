#include <auslab/cli.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <gmp.h>
#include <openssl/crypto.h>
#include <openssl/evp.h>

namespace auslab {

namespace {

constexpr const char* kEngineVersion = "0.1.0";

}  // namespace

std::string payload_digest(const nlohmann::json& payload) {
    const std::string bytes = payload.dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return hex.str();
}

nlohmann::json make_report(const std::string& command, const nlohmann::json& payload, double seconds) {
    nlohmann::json meta;
    meta["command"] = command;
    meta["engine"] = {{"auslab", kEngineVersion}, {"gmp", gmp_version}, {"openssl", OpenSSL_version(OPENSSL_VERSION)}};
    meta["payload_sha256"] = payload_digest(payload);
    meta["wall_seconds"] = seconds;
    return nlohmann::json{{"metadata", meta}, {"payload", payload}, {"schema_version", kReportSchemaVersion}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    f << text;
    if (!f) {
        throw std::runtime_error("write failed for " + path);
    }
}

nlohmann::json to_json(const AuslanderReport& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["degree"] = rep.degree;
    j["group"] = rep.group;
    j["order"] = rep.order;
    j["identity_component_dims"] = rep.growth.dims;
    j["growth_kind"] = to_string(rep.growth.kind);
    j["window"] = rep.growth.window;
    j["first_zero_degree"] = rep.growth.first_zero_degree;
    j["pertinency"] = rep.pertinency ? nlohmann::json(*rep.pertinency) : nlohmann::json(nullptr);
    j["verdict_empirical"] = to_string(rep.verdict);
    j["verdict_classifier"] = rep.classifier ? nlohmann::json(to_string(*rep.classifier)) : nlohmann::json(nullptr);
    j["agree"] = rep.agree ? nlohmann::json(*rep.agree) : nlohmann::json(nullptr);
    if (!rep.note.empty()) {
        j["note"] = rep.note;
    }
    return j;
}

std::vector<ScanRow> run_scan(const std::vector<int>& ns, int degree, unsigned jobs) {
    struct Job {
        int n;
        Subgroup sub;
    };
    std::vector<Job> work;
    for (int n : ns) {
        for (auto& sub : enumerate_subgroups(n)) {
            work.push_back(Job{n, std::move(sub)});
        }
    }
    std::vector<ScanRow> rows(work.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            try {
                const Job& job = work[i];
                const int d = degree >= 0 ? degree : 4 * job.n + 4;
                ScanRow row;
                row.n = job.n;
                row.descriptor = job.sub.descriptor.label();
                row.spec = print_group(job.sub.group);
                row.contains_all = job.sub.descriptor.contains_all_vertex_fixing_reflections;
                row.report = auslander_verdict(job.n, job.sub.group, d);
                rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

nlohmann::json scan_payload(const std::vector<ScanRow>& rows) {
    nlohmann::json list = nlohmann::json::array();
    std::size_t disagreements = 0;
    for (const auto& row : rows) {
        nlohmann::json j = to_json(row.report);
        j["subgroup_descriptor"] = row.descriptor;
        j["generators"] = row.spec;
        j["contains_all_vertex_fixing_reflections"] = row.contains_all;
        disagreements += row.report.agree != true;
        list.push_back(std::move(j));
    }
    return nlohmann::json{{"command", "scan"}, {"rows", list}, {"row_count", rows.size()},
                          {"disagreements", disagreements}};
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "n,subgroup_descriptor,order,contains_all_vertex_fixing_reflections,first_zero_degree,growth_kind,"
           "pertinency,verdict_empirical,verdict_classifier,agree\n";
    for (const auto& row : rows) {
        const auto& r = row.report;
        out << row.n << ",\"" << row.descriptor << "\"," << r.order << ',' << (row.contains_all ? "true" : "false")
            << ',' << r.growth.first_zero_degree << ',' << to_string(r.growth.kind) << ','
            << (r.pertinency ? std::to_string(*r.pertinency) : "") << ',' << to_string(r.verdict) << ','
            << (r.classifier ? to_string(*r.classifier) : "") << ','
            << (r.agree ? (*r.agree ? "true" : "false") : "") << '\n';
    }
    return out.str();
}

}  // namespace auslab
