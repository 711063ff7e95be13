// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace spinwave::cli {

namespace {

std::string printf_format(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

}  // namespace

std::string fixed4(double v) { return printf_format("%.4f", v); }

std::string sci6(double v) { return printf_format("%.5e", v); }

std::string compact(double v) { return printf_format("%g", v); }

bool write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout.flush());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    out.flush();
    return static_cast<bool>(out);
}

}  // namespace spinwave::cli
