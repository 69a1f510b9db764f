#pragma once

#include <gtest/gtest.h>

#include "gbs/error.hpp"

/// Asserts that `stmt` throws gbs::Error of the given kind.
#define EXPECT_GBS_ERROR(stmt, expected_kind)                                          \
  do {                                                                                 \
    try {                                                                              \
      stmt;                                                                            \
      ADD_FAILURE() << "expected " << ::gbs::to_string(::gbs::ErrorKind::expected_kind) \
                    << " from: " #stmt;                                                \
    } catch (const ::gbs::Error& gbs_error_) {                                         \
      EXPECT_EQ(gbs_error_.kind(), ::gbs::ErrorKind::expected_kind) << gbs_error_.what(); \
    }                                                                                  \
  } while (false)
