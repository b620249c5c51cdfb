// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap.cpp
//! Command-line entry point.
//---------------------------------------------------------------------------//
#include <iostream>
#include <string>
#include <vector>

#include "fraclap/cli/runner.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return fraclap::cli::command_line_main(args, std::cin, std::cout, std::cerr);
}
