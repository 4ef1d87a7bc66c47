// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Sample-file ingestion: plain UTF-8 text, one real per line, everything
// after '#' is a comment, blank lines are skipped. Malformed rows are
// reported with their line number.

#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>

#include "qpair/inversion.hpp"

namespace qpair {

inline SampleSet read_samples(std::istream& in, SampleKind kind,
                              const std::string& name = "<stream>") {
    SampleSet set;
    set.kind = kind;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        const auto end = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(begin, end - begin + 1);
        char* parse_end = nullptr;
        const double value = std::strtod(token.c_str(), &parse_end);
        if (parse_end != token.c_str() + token.size() || !std::isfinite(value))
            throw std::runtime_error(name + ": line " + std::to_string(lineno) +
                                     ": cannot parse '" + token + "' as a real number");
        set.values.push_back(value);
    }
    return set;
}

inline SampleSet read_samples_file(const std::string& path, SampleKind kind) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open sample file '" + path + "'");
    return read_samples(in, kind, path);
}

} // namespace qpair
