#include "cyclicap/cli.hpp"

int main(int argc, char** argv) { return cyclicap::run_cli(argc, argv); }
