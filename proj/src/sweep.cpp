#include "drd/sweep.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "drd/construct.hpp"
#include "drd/enumerate.hpp"
#include "drd/io.hpp"
#include "drd/solver.hpp"

namespace drd {

namespace {

std::string join_tags(const std::vector<std::string>& tags)
{
    std::string out;
    for (const auto& t : tags) {
        if (!out.empty())
            out += ",";
        out += t;
    }
    return out.empty() ? "-" : out;
}

std::string rule_summary(const ReductionTrace& trace)
{
    std::string out;
    for (const auto& step : trace.steps) {
        if (!out.empty())
            out += ",";
        out += step.rule;
    }
    return out.empty() ? "-" : out;
}

} // namespace

std::string format_report_row(const ReportRow& row)
{
    std::ostringstream ss;
    ss << "instance=" << row.instance << " n=" << row.n << " m=" << row.m;
    if (row.excluded) {
        ss << " excluded=1 tags=" << join_tags(row.tags);
        return ss.str();
    }
    ss << " gamma=" << row.gamma;
    if (row.construct_weight >= 0)
        ss << " construct=" << row.construct_weight;
    ss << " thresh=" << row.threshold_num << "/" << row.threshold_den
       << " satisfied=" << (row.satisfied ? 1 : 0) << " tags=" << join_tags(row.tags)
       << " rules=" << (row.rules.empty() ? "-" : row.rules) << " millis=" << row.millis;
    return ss.str();
}

SweepSummary run_sweep(const SweepConfig& config)
{
    using Clock = std::chrono::steady_clock;

    // materialize the instance list first so workers share nothing but an index
    std::vector<Graph> instances;
    EnumerateOptions eopts;
    eopts.min_degree = config.min_degree;
    eopts.connected_only = config.connected_only;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        enumerate_small(n, eopts, [&](const Graph& g) {
            instances.push_back(g);
            return true;
        });
    }

    std::vector<std::pair<int, std::uint64_t>> exclusion_keys; // (n, canonical code)
    for (const auto& spec : config.exclude) {
        Graph ex = generate(spec);
        if (ex.order() <= 8)
            exclusion_keys.emplace_back(ex.order(), canonical_code(ex));
    }

    std::vector<ReportRow> rows(instances.size());
    std::atomic<size_t> cursor{0};
    const int jobs = std::max(1, config.jobs);

    auto worker = [&]() {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= instances.size())
                return;
            const Graph& g = instances[i];
            ReportRow& row = rows[i];
            row.instance = static_cast<long long>(i);
            row.n = g.order();
            row.m = g.edge_count();
            row.threshold_num = 12LL * g.order();

            bool skip = false;
            for (const auto& [xn, xcode] : exclusion_keys)
                if (g.order() == xn && canonical_code(g) == xcode)
                    skip = true;
            if (skip) {
                row.excluded = true;
                continue;
            }

            const auto t0 = Clock::now();
            ConstructOptions copts;
            copts.fallback_n = config.fallback_n;
            if (config.mode == SweepMode::Exact || config.mode == SweepMode::Both) {
                SolveResult res = gamma_dr(g);
                row.gamma = res.value;
                BoundReport rep = check_bound(g, res.witness);
                row.tags = rep.tags;
            }
            if (config.mode == SweepMode::Construct || config.mode == SweepMode::Both) {
                ConstructResult cr = construct_drdf(g, copts);
                const long long w = weight(cr.labeling);
                if (config.mode == SweepMode::Construct) {
                    row.gamma = w;
                    BoundReport rep = check_bound(g, cr.labeling);
                    row.tags = rep.tags;
                } else {
                    row.construct_weight = w;
                }
                row.rules = rule_summary(cr.trace);
            }
            row.satisfied = 11 * row.gamma <= row.threshold_num;
            row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - t0)
                             .count();
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    SweepSummary summary;
    std::ofstream report;
    if (!config.report_path.empty()) {
        report.open(config.report_path);
        if (!report)
            throw std::runtime_error("cannot open report path " + config.report_path);
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& row = rows[i];
        ++summary.instances;
        if (row.excluded) {
            ++summary.excluded;
        } else if (row.satisfied) {
            ++summary.satisfied;
        } else {
            ++summary.violations;
            summary.violation_rows.push_back(row);
            if (!config.report_path.empty())
                write_edge_list_file(config.report_path + ".viol-" + std::to_string(i) +
                                         ".edges",
                                     instances[i]);
        }
        if (report)
            report << format_report_row(row) << '\n';
    }
    if (report) {
        report << "instances,satisfied,violations,excluded\n";
        report << summary.instances << ',' << summary.satisfied << ','
               << summary.violations << ',' << summary.excluded << '\n';
    }
    return summary;
}

} // namespace drd
