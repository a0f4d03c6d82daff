#include "dcmp/cli.hpp"

int main(int argc, char** argv) { return dcmp::run(argc, argv); }
