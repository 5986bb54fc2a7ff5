#include "sumlab/artifacts.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sumlab::artifacts {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    return in;
}

}  // namespace

nlohmann::json manifest_json(const Manifest& m) {
    json j;
    j["artifact_version"] = kArtifactVersion;
    j["command"] = m.command;
    j["parameters"] = m.parameters;
    if (m.seed) j["seed"] = *m.seed;
    j["outputs"] = m.outputs;
    if (m.elapsed_seconds) j["elapsed_seconds"] = *m.elapsed_seconds;
    return j;
}

void write_census_csv(const std::filesystem::path& path, const JointHistogram& hist) {
    auto out = open_out(path);
    out << "sum_size,diff_size,count\n";
    for (const auto& [key, c] : hist.counts)
        out << key.first << ',' << key.second << ',' << c << '\n';
}

std::map<std::pair<int, int>, std::uint64_t> read_census_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line != "sum_size,diff_size,count")
        throw std::runtime_error("census CSV missing expected header: " + path.string());
    std::map<std::pair<int, int>, std::uint64_t> counts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        int x, y;
        std::uint64_t c;
        char comma1, comma2;
        if (!(ss >> x >> comma1 >> y >> comma2 >> c) || comma1 != ',' || comma2 != ',')
            throw std::runtime_error("bad census CSV row: " + line);
        counts[{x, y}] += c;
    }
    return counts;
}

nlohmann::json filter_json(const Filter& filter) {
    json j;
    j["mode"] = filter_mode_name(filter);
    if (const auto* spec = std::get_if<FringeSpec>(&filter)) j["spec"] = fringe_spec_json(*spec);
    return j;
}

void write_census_sidecar(const std::filesystem::path& path, const JointHistogram& hist,
                          const Manifest& manifest) {
    const TallyReport report = tally(hist);
    json j = manifest_json(manifest);
    j["n"] = hist.n;
    j["filter"] = filter_json(hist.filter);
    j["totals"] = {{"sum", report.sum_total.get_str()}, {"diff", report.diff_total.get_str()}};
    j["class_counts"] = {{"sum_dominant", report.sum_dominant.get_str()},
                         {"difference_dominant", report.difference_dominant.get_str()},
                         {"balanced", report.balanced.get_str()}};
    write_json_file(path, j);
}

nlohmann::json read_json(const std::filesystem::path& path) {
    auto in = open_in(path);
    json j;
    in >> j;
    return j;
}

void write_histogram_csv(const std::filesystem::path& path, const Histogram& hist) {
    auto out = open_out(path);
    out << "bin,count\n";
    for (const auto& [bin, c] : hist.bins) out << bin << ',' << c << '\n';
}

Histogram read_histogram_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line != "bin,count")
        throw std::runtime_error("histogram CSV missing expected header: " + path.string());
    Histogram hist;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        int bin;
        std::uint64_t c;
        char comma;
        if (!(ss >> bin >> comma >> c) || comma != ',')
            throw std::runtime_error("bad histogram CSV row: " + line);
        hist.bins[bin] += c;
        hist.total += c;
    }
    return hist;
}

nlohmann::json config_json(const SampleConfig& cfg) {
    json j;
    j["n"] = cfg.n;
    j["trials"] = cfg.trials;
    j["inclusion_prob"] = to_string(cfg.inclusion_prob);
    j["seed"] = cfg.seed;
    j["condition_zero"] = cfg.condition_zero;
    return j;
}

void write_histogram_sidecar(const std::filesystem::path& path, const Histogram& hist,
                             const SampleConfig& cfg, const Manifest& manifest) {
    json j = manifest_json(manifest);
    j["config"] = config_json(cfg);
    j["total"] = hist.total;
    json bins = json::object();
    for (const auto& [bin, c] : hist.bins) bins[std::to_string(bin)] = c;
    j["bins"] = bins;
    write_json_file(path, j);
}

nlohmann::json rho_json(const RhoEstimate& est, const SampleConfig& cfg, const Manifest& manifest) {
    json j = manifest_json(manifest);
    j["config"] = config_json(cfg);
    j["rho_minus"] = est.rho_minus;
    j["rho_plus"] = est.rho_plus;
    j["rho_equal"] = est.rho_equal;
    j["se_minus"] = est.se_minus;
    j["se_plus"] = est.se_plus;
    j["se_equal"] = est.se_equal;
    j["counts"] = {{"difference_dominant", est.difference_dominant},
                   {"sum_dominant", est.sum_dominant},
                   {"balanced", est.balanced}};
    j["trials"] = est.trials;
    j["seed"] = est.seed;
    return j;
}

FringeSpec read_fringe_spec(const std::filesystem::path& path) {
    const json j = read_json(path);
    const int n = j.at("n").get<int>();
    const int ell = j.at("ell").get<int>();
    const int u = j.at("u").get<int>();
    std::vector<int> lower = j.at("L").get<std::vector<int>>();
    std::vector<int> upper = j.at("U").get<std::vector<int>>();
    return FringeSpec(n, ell, u, lower, upper);
}

nlohmann::json catalog_json(const std::vector<NamedExample>& catalog) {
    json out = json::array();
    for (const auto& ex : catalog)
        out.push_back({{"name", ex.name},
                       {"elements", ex.set.elements()},
                       {"expected_sum_size", ex.expected_sum_size},
                       {"expected_diff_size", ex.expected_diff_size},
                       {"source_note", ex.source_note}});
    return out;
}

nlohmann::json fringe_spec_json(const FringeSpec& spec) {
    json j;
    j["n"] = spec.n();
    j["ell"] = spec.ell();
    j["u"] = spec.u();
    j["L"] = spec.lower().elements();
    j["U"] = spec.upper().elements();
    return j;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    if (p.extension() == ".csv") return p.replace_extension(".json");
    p += ".json";
    return p;
}

}  // namespace sumlab::artifacts
