#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kryspace/classk.hpp"
#include "kryspace/diagnostics.hpp"
#include "kryspace/gmres.hpp"

namespace kryspace {

/// Scientific notation with 16 significant digits; "nan"/"inf" spelled out.
std::string format_real(double value);

/// Header `N,residual_norm,error_norm,solution_norm`, one row per iteration.
/// A missing error norm is written as an empty field.
void write_trace_csv(std::ostream& out, const std::vector<SolveRow>& rows);

/// Long-format `section,index,value` rows for the diagnostics report.
void write_diagnostics_csv(std::ostream& out, const DiagnosticsReport& report);

/// Header `degree,error_norm,bound,residual_norm`; bound is the disk
/// remainder bound of the degree-n series times ||g||.
void write_classk_csv(std::ostream& out, const std::vector<ClassKRow>& rows, Complex center, double radius,
                      double g_norm);

/// Three-panel line chart: error and residual on log-y axes, solution norm linear.
std::string render_trace_svg(const std::vector<SolveRow>& rows, const std::string& title);

}  // namespace kryspace
