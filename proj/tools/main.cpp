#include "commands.hpp"

int main(int argc, char** argv) { return sl2tilt::cli::run_cli(argc, argv); }
