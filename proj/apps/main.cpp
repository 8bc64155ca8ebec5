#include "shortsl2/cli.hpp"

int main(int argc, char** argv) { return shortsl2::run_cli(argc, argv); }
