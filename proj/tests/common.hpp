#pragma once

#include <string>

#ifndef SRCY_TEST_FIXTURES
#error "SRCY_TEST_FIXTURES must point at the data directory"
#endif

inline std::string fixture(const std::string& rel) { return std::string(SRCY_TEST_FIXTURES) + "/" + rel; }
