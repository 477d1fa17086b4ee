#include "pathrc/cli.hpp"

int main(int argc, char** argv) { return pathrc::cli::run_main(argc, argv); }
