#include <catch2/catch_amalgamated.cpp>  // NOLINT: amalgamated build
