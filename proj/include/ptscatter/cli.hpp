#pragma once

#include "ptscatter/report.hpp"

namespace ptscatter::cli {

/// Entry point behind main(). Exit codes: 0 success, 2 argument error,
/// 3 verification failure.
int run_cli(int argc, const char* const* argv);

/// Dispatch one parsed job (also used by --job files and the tests).
int run_job(const report::JobConfig& job);

} // namespace ptscatter::cli
