#include "radon/cli.hpp"

int main(int argc, char** argv) { return radon::run_cli(argc, argv); }
