#include "cli.hpp"

int main(int argc, char** argv) { return rotzp::cli::main_entry(argc, argv); }
