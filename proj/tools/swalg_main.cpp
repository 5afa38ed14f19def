#include "swalg/commands.hpp"

int main(int argc, char** argv) { return swalg::cli_main(argc, argv); }
