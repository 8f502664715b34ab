#include <catch_amalgamated.cpp>
