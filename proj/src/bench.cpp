#include "impbase/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "impbase/algorithms.hpp"
#include "impbase/bases.hpp"
#include "impbase/reduction.hpp"

namespace impbase {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Median wall time of one call, microseconds.
template <typename F>
double median_call_us(F&& call, std::size_t reps = 1001) {
    std::vector<double> samples;
    samples.reserve(reps);
    for (std::size_t i = 0; i < reps; ++i) {
        auto start = std::chrono::steady_clock::now();
        call();
        auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
    }
    std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(reps / 2),
                     samples.end());
    return samples[reps / 2];
}

ElementSet random_subset_of_size(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    ElementSet out;
    while (out.count() < k) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
        out.insert(pick(rng));
    }
    return out;
}

} // namespace

ClosureSystem generate_system(const GeneratorConfig& config, std::mt19937_64& rng) {
    if (config.domain_size < 2)
        throw std::invalid_argument("generator needs a domain of at least 2 elements");
    if (config.min_subsets > config.max_subsets || config.min_subsets < 1)
        throw std::invalid_argument("generator subset range is empty");
    const std::size_t n = config.domain_size;
    const ElementSet full = ElementSet::full(n);
    std::uniform_int_distribution<int> count_dist(config.min_subsets, config.max_subsets);
    const int k = count_dist(rng);

    std::vector<ElementSet> family;
    family.push_back({});
    family.push_back(full);
    std::uniform_int_distribution<std::uint64_t> mask_dist(0, full.mask());
    for (int i = 0; i < k; ++i) {
        ElementSet s;
        do {
            s = ElementSet::from_mask(mask_dist(rng));
        } while (s.empty() || s == full);
        family.push_back(s);
    }
    return ClosureSystem(Universe::numbered(n), std::move(family));
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

std::vector<BenchRecord> run_experiment(const GeneratorConfig& config) {
    std::vector<BenchRecord> records;

    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        std::mt19937_64 rng = trial_rng(config.seed, trial);
        ClosureSystem raw = generate_system(config, rng);
        const std::size_t closed = raw.closed_family().size();

        auto [system, map] = reduce_system(raw);
        if (system.universe_size() < 3) continue;

        Basis dg_unit = unit_expansion(build_dg_canonical(system));
        Basis delta = build_sigma_delta(system);
        Basis d_basis = build_d_basis(system);

        auto push = [&](const std::string& basis, const std::string& metric, double value,
                        std::size_t input_size) {
            records.push_back({config.domain_size, closed, basis, metric, value, input_size});
        };

        for (std::size_t q = 0; q < config.inputs_per_trial; ++q) {
            ElementSet input = random_subset_of_size(system.universe_size(), 3, rng);

            FolkloreResult fk = folklore_closure(dg_unit, input);
            push("dg-unit", "implications-checked", static_cast<double>(fk.checks), 3);
            push("dg-unit", "passes", static_cast<double>(fk.passes), 3);

            SweepResult sd = ordered_iteration(delta, input);
            push("delta", "implications-checked", static_cast<double>(sd.checks), 3);

            SweepResult dd = ordered_iteration(d_basis, input);
            push("d", "implications-checked", static_cast<double>(dd.checks), 3);

            if (config.timing) {
                push("d", "time-ordered-us",
                     median_call_us([&] { ordered_iteration(d_basis, input); }), 3);
                push("d", "time-fc-us",
                     median_call_us([&] { forward_chaining_closure(d_basis, input); }), 3);
                ForwardChainingState state(d_basis);
                push("d", "time-fc-pre-us",
                     median_call_us([&] { forward_chaining_closure(d_basis, input, &state); }), 3);
                push("d", "time-wild-us",
                     median_call_us([&] { wild_closure(d_basis, input); }), 3);
                push("d", "time-folklore-us",
                     median_call_us([&] { folklore_closure(d_basis, input); }), 3);
            }
        }
    }
    return records;
}

std::size_t closed_set_bucket(std::size_t closed_sets) {
    return 5 * ((closed_sets + 2) / 5);
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records, std::uint64_t seed) {
    struct Acc {
        double sum = 0, sum_sq = 0;
        std::size_t n = 0;
    };
    std::map<std::tuple<std::size_t, std::size_t, std::string, std::string>, Acc> groups;
    for (const BenchRecord& r : records) {
        Acc& acc = groups[{r.domain, closed_set_bucket(r.closed_sets), r.basis, r.metric}];
        acc.sum += r.value;
        acc.sum_sq += r.value * r.value;
        ++acc.n;
    }

    std::vector<BenchSummary> rows;
    rows.reserve(groups.size());
    for (const auto& [key, acc] : groups) {
        BenchSummary row;
        row.domain = std::get<0>(key);
        row.closed_sets_bucket = std::get<1>(key);
        row.basis = std::get<2>(key);
        row.metric = std::get<3>(key);
        row.trials = acc.n;
        row.seed = seed;
        row.mean = acc.sum / static_cast<double>(acc.n);
        if (acc.n > 1) {
            double var = (acc.sum_sq - acc.sum * acc.sum / static_cast<double>(acc.n)) /
                         static_cast<double>(acc.n - 1);
            row.stddev = std::sqrt(std::max(0.0, var));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchSummary>& rows) {
    out << "domain,closed_sets_bucket,basis,metric,mean,stddev,trials,seed\n";
    for (const BenchSummary& r : rows) {
        out << r.domain << ',' << r.closed_sets_bucket << ',' << r.basis << ',' << r.metric << ','
            << r.mean << ',' << r.stddev << ',' << r.trials << ',' << r.seed << '\n';
    }
}

} // namespace impbase
