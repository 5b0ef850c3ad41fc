#include "bench_cli.hpp"

int main(int argc, char** argv) { return parareal::bench::cli_main(argc, argv); }
