#include "hodge_asym/cli.hpp"

int main(int argc, char** argv) { return hodge_asym::run(argc, argv); }
