#include "asd/cli.hpp"

int main(int argc, char** argv) { return asd::cli_main(argc, argv); }
