#include <doctest.h>

TEST_SUITE_BEGIN("ensembles");

TEST_SUITE_END();
