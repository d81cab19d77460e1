#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "impbase/closure_system.hpp"

namespace impbase {

struct GeneratorConfig {
    std::size_t domain_size = 6;
    int min_subsets = 3;
    int max_subsets = 8;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::size_t inputs_per_trial = 1;
    bool timing = false;
};

// One measurement: a metric value for one basis kind on one generated
// system. closed_sets is the exact family size; bucketing happens at
// aggregation time.
struct BenchRecord {
    std::size_t domain = 0;
    std::size_t closed_sets = 0;
    std::string basis;
    std::string metric;
    double value = 0;
    std::size_t input_size = 0;
};

// CSV row aggregated over (domain, closed-set bucket, basis, metric).
struct BenchSummary {
    std::size_t domain = 0;
    std::size_t closed_sets_bucket = 0;
    std::string basis;
    std::string metric;
    double mean = 0;
    double stddev = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

// A random closure system: between min_subsets and max_subsets subsets of
// the domain (each element kept with probability 1/2, rejecting the empty
// and the full set), completed with all intersections, the empty set and
// the domain.
ClosureSystem generate_system(const GeneratorConfig& config, std::mt19937_64& rng);

// Deterministic per-trial generator stream split off the configured seed.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

// For each generated system, builds the unit canonical basis, the
// dependence-relation basis and the ordered D-basis, then measures the
// implications checked to close random 3-element inputs: full passes of the
// folklore loop for the canonical unit basis, one ordered sweep for the two
// direct kinds. With timing enabled, also records median wall times of the
// closure algorithms on the D-basis.
std::vector<BenchRecord> run_experiment(const GeneratorConfig& config);

// Nearest multiple of five, matching the closed-set buckets of the summary.
std::size_t closed_set_bucket(std::size_t closed_sets);

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records, std::uint64_t seed);

// Header: domain,closed_sets_bucket,basis,metric,mean,stddev,trials,seed
void write_csv(std::ostream& out, const std::vector<BenchSummary>& rows);

} // namespace impbase
