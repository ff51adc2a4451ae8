#include "hfsc/cli.hpp"

int main(int argc, char** argv) { return hfsc::cli::run_cli(argc, argv); }
