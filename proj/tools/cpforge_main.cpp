#include "cpforge/cli.hpp"

int main(int argc, char** argv) { return cpforge::cli::run_cli(argc, argv); }
