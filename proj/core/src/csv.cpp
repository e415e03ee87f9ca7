#include "frnet/csv.hpp"

#include <complex>
#include <ostream>

namespace frnet {
namespace {

// %.17g with signed zero collapsed, so equal values always print alike.
std::string g17(double x) {
    if (x == 0.0) x = 0.0;
    return format_g17(x);
}

}  // namespace

void write_frequency_csv(std::ostream& os, const FrequencyResponse& fr) {
    os << "omega,re,im,abs,arg,branch_ok\n";
    for (const auto& s : fr.samples) {
        os << g17(s.omega) << ',' << g17(s.value.real()) << ','
           << g17(s.value.imag()) << ',' << g17(std::abs(s.value)) << ','
           << g17(std::arg(s.value)) << ',' << (s.branch_ok ? '1' : '0')
           << '\n';
    }
}

void write_time_series_csv(std::ostream& os, const TimeSeries& ts) {
    os << "t,u\n";
    for (std::size_t k = 0; k < ts.values.size(); ++k) {
        os << g17(k * ts.h) << ',' << g17(ts.values[k]) << '\n';
    }
}

void write_convergence_csv(std::ostream& os,
                           const std::vector<ConvergenceRow>& rows) {
    os << "depth,abs_err\n";
    for (const auto& row : rows) {
        os << row.depth << ',' << g17(row.abs_err) << '\n';
    }
}

}  // namespace frnet
