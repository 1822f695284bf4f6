#include "hh/checks.hpp"

int main(int argc, char** argv) { return hh::cliMain(argc, argv); }
