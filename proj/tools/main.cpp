#include "ompcdpso/harness/cli.hpp"

int main(int argc, char** argv)
{
    return ompcdpso::harness::cli(argc, argv);
}
