#pragma once

#include <iosfwd>
#include <vector>

#include "frnet/frequency.hpp"
#include "frnet/time_domain.hpp"

namespace frnet {

/// Header `omega,re,im,abs,arg,branch_ok`; floats with 17 significant
/// digits, branch_ok as 0/1. Byte-deterministic for fixed input.
void write_frequency_csv(std::ostream& os, const FrequencyResponse& fr);

/// Header `t,u`; t = k*h.
void write_time_series_csv(std::ostream& os, const TimeSeries& ts);

/// One row of a truncation-depth sweep: |Z_depth - quad_root|.
struct ConvergenceRow {
    int depth = 0;
    double abs_err = 0.0;
};

/// Header `depth,abs_err`.
void write_convergence_csv(std::ostream& os,
                           const std::vector<ConvergenceRow>& rows);

}  // namespace frnet
