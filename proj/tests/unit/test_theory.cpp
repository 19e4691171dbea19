#include <doctest.h>

TEST_SUITE_BEGIN("theory");

TEST_SUITE_END();
