// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace solxs {

// Full command-line front end. Returns the process exit status; all errors
// are reported as a single diagnostic line on stderr.
int run_cli(int argc, const char* const* argv);

}  // namespace solxs
