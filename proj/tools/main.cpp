#include "ptscatter/cli.hpp"

int main(int argc, char** argv) { return ptscatter::cli::run_cli(argc, argv); }
