#include "ultralip/cli.hpp"

int main(int argc, char** argv) { return ultralip::cli_main(argc, argv); }
