#include "onelap/cli.hpp"

int main(int argc, char** argv) { return onelap::run_cli(argc, argv); }
