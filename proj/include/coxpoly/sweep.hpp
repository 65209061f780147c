#pragma once

#include "coxpoly/coxeter.hpp"
#include "coxpoly/spectra.hpp"

#include <vector>

namespace coxpoly {

struct SweepRow {
    WeightType weights;
    RootLocationReport report; // of the extended canonical Coxeter polynomial
    bool representation_ok = false;
    bool recursion_ok = false; // vacuously true when p_t = 1
};

struct SweepSummary {
    long type_count = 0;
    long rho_one_count = 0;
    long max_off_circle = 0;
};

/// One row per weight type, sorted by (weight sum, lexicographic weights);
/// the summary is recomputed from the rows.
struct SweepReport {
    int max_sum = 0;
    int max_t = 0;
    std::vector<SweepRow> rows;
    SweepSummary summary;
};

/// Classifies every weight type with sum <= max_sum and t <= max_t.
/// Rows are evaluated in parallel (threads = 0 picks the hardware count)
/// and assembled in enumeration order, so output is deterministic.
SweepReport run_sweep(int max_sum, int max_t, const Rat& tol, int threads = 0);

} // namespace coxpoly
