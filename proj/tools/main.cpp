#include "flowlab/cli.hpp"

int main(int argc, char** argv) { return flowlab::cli::run(argc, argv); }
