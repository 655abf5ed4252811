#include "linecolor/cli.hpp"

int main(int argc, char** argv) { return linecolor::run_cli(argc, argv); }
