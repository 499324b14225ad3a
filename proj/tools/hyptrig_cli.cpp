#include "hyptrig/cli.hpp"

int main(int argc, char** argv) { return hyptrig::cli::run(argc, argv); }
