#include "nowhere/cli.hpp"

int main(int argc, char** argv) { return nowhere::cli::run(argc, argv); }
