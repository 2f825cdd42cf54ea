#include "kahler/cli.hpp"

int main(int argc, char** argv) { return kahler::cli_main(argc, argv); }
