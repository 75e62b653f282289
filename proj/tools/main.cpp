// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "algcheck/cli.hpp"

int main(int argc, char** argv) {
  return algcheck::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
