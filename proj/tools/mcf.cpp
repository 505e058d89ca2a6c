#include "mcf/cli.hpp"

int main(int argc, char** argv) { return mcf::cli::run(argc, argv); }
