#include "cli.hpp"

int main(int argc, char** argv) { return swe::cli::run_cli(argc, argv); }
