#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sumlab/construct.hpp"
#include "sumlab/enumerate.hpp"
#include "sumlab/montecarlo.hpp"

namespace sumlab::artifacts {

inline constexpr int kArtifactVersion = 1;

// Every run that writes files records one manifest describing it. Stochastic
// runs always carry their seed; elapsed time is omitted when byte-identical
// reruns are part of the contract.
struct Manifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> outputs;
    std::optional<double> elapsed_seconds;
};

nlohmann::json manifest_json(const Manifest& m);

// Census files: CSV with header sum_size,diff_size,count plus a JSON sidecar
// carrying n, filter, totals, class counts and the manifest.
void write_census_csv(const std::filesystem::path& path, const JointHistogram& hist);
std::map<std::pair<int, int>, std::uint64_t> read_census_csv(const std::filesystem::path& path);
void write_census_sidecar(const std::filesystem::path& path, const JointHistogram& hist,
                          const Manifest& manifest);
nlohmann::json read_json(const std::filesystem::path& path);

// Histogram files: CSV with header bin,count plus JSON embedding the config.
void write_histogram_csv(const std::filesystem::path& path, const Histogram& hist);
Histogram read_histogram_csv(const std::filesystem::path& path);
void write_histogram_sidecar(const std::filesystem::path& path, const Histogram& hist,
                             const SampleConfig& cfg, const Manifest& manifest);

nlohmann::json config_json(const SampleConfig& cfg);
nlohmann::json filter_json(const Filter& filter);
nlohmann::json rho_json(const RhoEstimate& est, const SampleConfig& cfg, const Manifest& manifest);

// Fringe spec files: {"n":..,"ell":..,"u":..,"L":[..],"U":[..]}.
FringeSpec read_fringe_spec(const std::filesystem::path& path);
nlohmann::json fringe_spec_json(const FringeSpec& spec);

// Catalog entries as {name, elements, expected_sum_size, expected_diff_size,
// source_note}.
nlohmann::json catalog_json(const std::vector<NamedExample>& catalog);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

// Sidecar path convention: replace a .csv suffix with .json, else append.
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

}  // namespace sumlab::artifacts
