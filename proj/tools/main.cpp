#include "phaselock/cli.hpp"

int main(int argc, char** argv) { return phaselock::cli::run(argc, argv); }
