#include "bras/cli.hpp"

int main(int argc, char** argv) { return bras::run_cli(argc, argv); }
