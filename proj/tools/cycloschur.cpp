#include <iostream>

#include "cycloschur/cli.hpp"

int main(int argc, char** argv) { return cycloschur::run_cli(argc, argv, std::cout, std::cerr); }
