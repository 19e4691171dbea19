#include <doctest.h>

TEST_SUITE_BEGIN("run");

TEST_SUITE_END();
