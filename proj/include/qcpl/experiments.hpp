#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qcpl/parallel.hpp"

namespace qcpl {

// Flat key=value configuration (# comments). QCPL_SEED in the environment
// overrides the seed key. With a fixed seed every run emits byte-identical
// CSV on one machine configuration.
class ExperimentConfig {
public:
    static ExperimentConfig parse(std::istream& in);
    static ExperimentConfig load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::string get(const std::string& key, const std::string& fallback) const;
    std::string require(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::vector<double> get_grid(const std::string& key, const std::string& fallback) const;

    std::uint64_t seed() const;
    void set(const std::string& key, const std::string& value) { values_[key] = value; }

private:
    std::map<std::string, std::string> values_;
};

struct ProbeResult {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    // Metadata header (# key=value lines), column header, then data rows with
    // round-trip-safe decimal formatting.
    void write_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>&
                                          metadata) const;
};

// Shape distortion of Moebius maps defined on B(0,R) against the domain ball
// B(0,1), over a grid of R. Columns: R, max_shape_distortion,
// min_output_fullness, reversal_count.
ProbeResult run_shape_vs_radius(const ExperimentConfig& config, std::ostream& csv);

// Min output fullness of delta-small full simplices under maps of nominal
// dilatation K. Columns: K, delta, min_output_fullness, reversal_count.
ProbeResult run_fullness_vs_k(const ExperimentConfig& config, std::ostream& csv);

// Secant pipeline across subdivision levels. Columns: level, mesh_size,
// c0_error, max_ellipticity, min_fullness, certified, degree. Throws
// CertificationFailed if either of the two finest levels does not certify.
ProbeResult run_secant_convergence(const ExperimentConfig& config, std::ostream& csv);

// Max over cells of |internal/ambient fullness - 1| across three mesh
// halvings. Columns: level, mesh_size, max_deviation.
ProbeResult run_commensurability(const ExperimentConfig& config, std::ostream& csv);

// Measured bilipschitz constant of exp on delta-balls by dense pair sampling.
// Columns: delta, measured_L, analytic_L (delta/sin(delta) on the unit
// sphere, 1 elsewhere).
ProbeResult run_exp_bilipschitz(const ExperimentConfig& config, std::ostream& csv);

// Dispatches on experiment_id and writes <id>.csv into out_dir. Exit-code
// contract: 0 ok, 1 config error, 2 certification failure, 3 numerical guard.
int run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir);

}  // namespace qcpl
