// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/cli.hpp"

int main(int argc, char** argv) { return polariton::cli::main_entry(argc, argv); }
