#include "commands.hpp"

int main(int argc, char** argv) { return hdran::cli::run(argc, argv); }
