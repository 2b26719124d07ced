#include "porism/lab/cli.hpp"

int main(int argc, char** argv) { return porism::lab::run_cli(argc, argv); }
