#include "k3fib/cli.hpp"

int main(int argc, char** argv) { return k3fib::cli_main(argc, argv); }
