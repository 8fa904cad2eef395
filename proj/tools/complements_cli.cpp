#include "complements/cli.hpp"

int main(int argc, char** argv) { return complements::cli::cli_main(argc, argv); }
