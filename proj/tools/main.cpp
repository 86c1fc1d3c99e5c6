#include "cli.hpp"

int main(int argc, char** argv) { return lpm::cli::main(argc, argv); }
