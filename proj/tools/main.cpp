#include "baire/cli.hpp"

int main(int argc, char** argv) { return baire::cli::run_main(argc, argv); }
