#include "clearbound/scenario_io.hpp"

int main(int argc, char** argv) { return clearbound::run_cli(argc, argv); }
