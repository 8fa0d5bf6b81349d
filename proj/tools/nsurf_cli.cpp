#include "nsurf/cli.hpp"

int main(int argc, char** argv) { return nsurf::cli::run(argc, argv); }
