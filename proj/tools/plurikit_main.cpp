#include "plurikit/cli.hpp"

int main(int argc, char** argv) { return plurikit::run_cli(argc, argv); }
