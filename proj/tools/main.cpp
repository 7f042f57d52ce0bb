#include "commands.hpp"

int main(int argc, char** argv) { return dgt::cli::main(argc, argv); }
