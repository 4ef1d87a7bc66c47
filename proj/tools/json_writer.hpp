// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qpair::tool {

// Up to 17 significant digits: enough for exact double round trips.
inline std::string format_double(double v) {
    if (!std::isfinite(v))
        return "null";
    if (v == 0.0)
        return "0"; // fold away the negative-zero sign
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Streaming JSON writer with deterministic output: keys in insertion
// order, two-space indentation, doubles via format_double.
class JsonWriter {
  public:
    explicit JsonWriter(std::ostream& os) : os_(os) {}

    void begin_object() {
        prefix();
        os_ << '{';
        frames_.push_back(false);
    }
    void begin_array() {
        prefix();
        os_ << '[';
        frames_.push_back(false);
    }
    void end_object() { close('}'); }
    void end_array() { close(']'); }

    void key(std::string_view k) {
        prefix();
        write_string(k);
        os_ << ": ";
        after_key_ = true;
    }

    void value(double v) {
        prefix();
        os_ << format_double(v);
    }
    void value(int v) {
        prefix();
        os_ << v;
    }
    void value(long long v) {
        prefix();
        os_ << v;
    }
    void value(std::size_t v) {
        prefix();
        os_ << v;
    }
    void value(bool v) {
        prefix();
        os_ << (v ? "true" : "false");
    }
    void value(std::string_view v) {
        prefix();
        write_string(v);
    }
    void value(const char* v) { value(std::string_view(v)); }
    void null() {
        prefix();
        os_ << "null";
    }

    void finish() { os_ << '\n'; }

  private:
    void close(char closer) {
        const bool had_children = frames_.back();
        frames_.pop_back();
        if (had_children) {
            os_ << '\n';
            indent(frames_.size());
        }
        os_ << closer;
    }

    void prefix() {
        if (after_key_) {
            after_key_ = false;
            return;
        }
        if (frames_.empty())
            return;
        if (frames_.back())
            os_ << ',';
        frames_.back() = true;
        os_ << '\n';
        indent(frames_.size());
    }

    void indent(std::size_t depth) {
        for (std::size_t i = 0; i < depth; ++i)
            os_ << "  ";
    }

    void write_string(std::string_view s) {
        os_ << '"';
        for (char c : s) {
            switch (c) {
            case '"': os_ << "\\\""; break;
            case '\\': os_ << "\\\\"; break;
            case '\n': os_ << "\\n"; break;
            case '\t': os_ << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    os_ << buf;
                } else {
                    os_ << c;
                }
            }
        }
        os_ << '"';
    }

    std::ostream& os_;
    std::vector<bool> frames_; // per depth: has emitted a child
    bool after_key_ = false;
};

} // namespace qpair::tool
