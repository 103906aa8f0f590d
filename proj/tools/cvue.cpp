#include "cvue/cli.hpp"

int main(int argc, char** argv) { return cvue::run_cli(argc, argv); }
