#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>

#include <omp.h>

#include "afsolve/bench.hpp"
#include "afsolve/error.hpp"
#include "afsolve/io.hpp"

namespace afsolve::bench {

std::string_view to_string(RunStatus status) noexcept {
    switch (status) {
        case RunStatus::solved: return "SOLVED";
        case RunStatus::timeout: return "TIMEOUT";
        case RunStatus::unknown: return "UNKNOWN";
    }
    return "?";
}

namespace {

BenchRecord measure(const BenchInstance& instance, SemanticsKind kind, const SuiteOptions& options) {
    using clock = std::chrono::steady_clock;
    BenchRecord rec;
    rec.instance_id = instance.id;
    rec.kind = kind;
    rec.n_args = instance.framework.size();
    rec.n_attacks = instance.framework.attacks().size();

    const auto start = clock::now();
    const auto deadline =
        start + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double, std::milli>(options.timeout_ms));
    SearchOptions search;
    search.node_budget = options.node_budget;
    search.should_stop = [deadline] { return clock::now() >= deadline; };

    auto elapsed_ms = [&] { return std::chrono::duration<double, std::milli>(clock::now() - start).count(); };
    try {
        const ExtensionSet exts = enumerate(instance.framework, kind, search);
        rec.time_ms = elapsed_ms();
        if (rec.time_ms > options.timeout_ms) {
            rec.status = RunStatus::timeout;
        } else {
            rec.status = RunStatus::solved;
            rec.extension_count = exts.size();
        }
    } catch (const SearchCancelled&) {
        rec.time_ms = elapsed_ms();
        rec.status = RunStatus::timeout;
    } catch (const BudgetExceeded&) {
        rec.time_ms = elapsed_ms();
        rec.status = RunStatus::unknown;
    }
    return rec;
}

// RFC 4180: quote fields containing separators or quotes.
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::size_t kind_rank(SemanticsKind k) {
    return static_cast<std::size_t>(std::find(all_semantics.begin(), all_semantics.end(), k) - all_semantics.begin());
}

}  // namespace

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double upper = values[mid];
    if (values.size() % 2 == 1) return upper;
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lower + upper) / 2.0;
}

std::vector<KindSummary> summarize(std::span<const BenchRecord> records, std::span<const SemanticsKind> kinds,
                                   double timeout_ms) {
    std::vector<KindSummary> out;
    for (const auto kind : kinds) {
        KindSummary s;
        s.kind = kind;
        std::vector<double> times;
        for (const auto& r : records) {
            if (r.kind != kind) continue;
            ++s.instances;
            if (r.status == RunStatus::solved) {
                ++s.solved;
                times.push_back(r.time_ms);
            } else {
                times.push_back(timeout_ms);
            }
        }
        s.median_ms = median(std::move(times));
        out.push_back(s);
    }
    return out;
}

SuiteResult run_suite(std::span<const BenchInstance> instances, std::span<const SemanticsKind> kinds,
                      const SuiteOptions& options, const std::filesystem::path& out_csv) {
    const std::size_t tasks = instances.size() * kinds.size();
    SuiteResult result;
    result.records.resize(tasks);

    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, options.workers))
    for (std::size_t t = 0; t < tasks; ++t) {
        try {
            result.records[t] = measure(instances[t / kinds.size()], kinds[t % kinds.size()], options);
        } catch (...) {
#pragma omp critical(afsolve_bench_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    std::stable_sort(result.records.begin(), result.records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
        return kind_rank(a.kind) < kind_rank(b.kind);
    });
    result.summary = summarize(result.records, kinds, options.timeout_ms);
    if (!out_csv.empty()) io::write_file(out_csv, records_to_csv(result.records));
    return result;
}

std::string records_to_csv(std::span<const BenchRecord> records) {
    std::string out = "instance_id,kind,status,time_ms,ext_count,n_args,n_attacks\n";
    char time[64];
    for (const auto& r : records) {
        std::snprintf(time, sizeof time, "%.3f", r.time_ms);
        out += csv_field(r.instance_id);
        out += ',';
        out += to_string(r.kind);
        out += ',';
        out += to_string(r.status);
        out += ',';
        out += time;
        out += ',';
        if (r.extension_count) out += std::to_string(*r.extension_count);
        out += ',';
        out += std::to_string(r.n_args);
        out += ',';
        out += std::to_string(r.n_attacks);
        out += '\n';
    }
    return out;
}

std::string summary_to_text(std::span<const KindSummary> summary) {
    std::string out = "kind,instances,solved,median_ms\n";
    char median[64];
    for (const auto& s : summary) {
        std::snprintf(median, sizeof median, "%.3f", s.median_ms);
        out += std::string(to_string(s.kind)) + "," + std::to_string(s.instances) + "," + std::to_string(s.solved) +
               "," + median + "\n";
    }
    return out;
}

}  // namespace afsolve::bench
