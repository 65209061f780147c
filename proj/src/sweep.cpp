#include "coxpoly/sweep.hpp"

#include <atomic>
#include <optional>
#include <stdexcept>
#include <thread>

namespace coxpoly {

SweepReport run_sweep(int max_sum, int max_t, const Rat& tol, int threads) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    SweepReport report;
    report.max_sum = max_sum;
    report.max_t = max_t;

    std::vector<WeightType> types = enumerate_weight_types(max_sum, max_t);
    std::vector<std::optional<SweepRow>> slots(types.size());

    unsigned worker_count = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
    if (worker_count == 0) worker_count = 1;
    if (worker_count > types.size() && !types.empty()) worker_count = static_cast<unsigned>(types.size());

    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next.fetch_add(1); i < types.size(); i = next.fetch_add(1)) {
            const WeightType& w = types[i];
            SweepRow row{w, classify_self_reciprocal(extended_canonical_coxeter(w), tol),
                         verify_representation(w), w.last() >= 2 ? verify_recursion(w) : true};
            slots[i] = std::move(row);
        }
    };
    if (worker_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    report.rows.reserve(slots.size());
    for (auto& slot : slots) report.rows.push_back(std::move(*slot));
    report.summary.type_count = static_cast<long>(report.rows.size());
    for (const SweepRow& row : report.rows) {
        if (row.report.is_rho_one) ++report.summary.rho_one_count;
        if (row.report.off_unit_circle > report.summary.max_off_circle)
            report.summary.max_off_circle = row.report.off_unit_circle;
    }
    return report;
}

} // namespace coxpoly
