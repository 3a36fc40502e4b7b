#include "cst/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cst::cli_dispatch({argv, argv + argc}, std::cout, std::cerr); }
