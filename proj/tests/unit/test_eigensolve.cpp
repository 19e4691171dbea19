#include <doctest.h>

TEST_SUITE_BEGIN("eigensolve");

TEST_SUITE_END();
