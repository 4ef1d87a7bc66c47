// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "qpair/sample_io.hpp"

using namespace qpair;

TEST_CASE("plain values, comments, and blank lines") {
    std::istringstream in("# header comment\n"
                          "1.5\n"
                          "\n"
                          "  -2.25  \n"
                          "3e-2 # trailing note\n"
                          "\t# indented comment\n"
                          "4\n");
    const auto set = read_samples(in, SampleKind::position);
    REQUIRE(set.values.size() == 4);
    CHECK(set.values[0] == 1.5);
    CHECK(set.values[1] == -2.25);
    CHECK(set.values[2] == 0.03);
    CHECK(set.values[3] == 4.0);
    CHECK(set.kind == SampleKind::position);
}

TEST_CASE("malformed rows report their line number") {
    std::istringstream in("1.0\n2.0\nnot-a-number\n");
    try {
        read_samples(in, SampleKind::momentum, "widths.txt");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("widths.txt") != std::string::npos);
        CHECK(msg.find("line 3") != std::string::npos);
    }
}

TEST_CASE("trailing junk after a number is an error") {
    std::istringstream in("1.0 2.0\n");
    CHECK_THROWS_AS(read_samples(in, SampleKind::position), std::runtime_error);
}

TEST_CASE("non-finite textual values are rejected") {
    std::istringstream in("inf\n");
    CHECK_THROWS_AS(read_samples(in, SampleKind::position), std::runtime_error);
    std::istringstream in2("nan\n");
    CHECK_THROWS_AS(read_samples(in2, SampleKind::position), std::runtime_error);
}

TEST_CASE("missing files are reported") {
    CHECK_THROWS_AS(read_samples_file("/nonexistent/qpair.txt", SampleKind::position),
                    std::runtime_error);
}

TEST_CASE("empty input yields an empty set") {
    std::istringstream in("# nothing but comments\n\n");
    CHECK(read_samples(in, SampleKind::momentum).values.empty());
}
