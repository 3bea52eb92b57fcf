#include "flowalg/cli.hpp"

int main(int argc, char** argv) { return flowalg::cli::main(argc, argv); }
