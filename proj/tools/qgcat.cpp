#include "qgcat/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return qgcat::cli::run(argc, argv, std::cout, std::cerr); }
