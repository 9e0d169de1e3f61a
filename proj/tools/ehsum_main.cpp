#include "ehsum/cli.hpp"

int main(int argc, char** argv) { return ehsum::cli_main(argc, argv); }
