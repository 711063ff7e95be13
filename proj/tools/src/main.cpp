// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

int main(int argc, char** argv) { return spinwave::cli::run_cli(argc, argv); }
