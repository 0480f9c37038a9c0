// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/cli.hpp"

int main(int argc, char** argv) { return solxs::run_cli(argc, argv); }
