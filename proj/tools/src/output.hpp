// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace spinwave::cli {

/// "%.4f" (round half to even via the default FP environment).
std::string fixed4(double v);

/// Six significant digits, scientific: "%.5e".
std::string sci6(double v);

/// Shortest natural form, "%g".
std::string compact(double v);

/// Write text to path, or to stdout when path is empty. Returns false when
/// the file cannot be opened or written.
bool write_text(const std::string& path, const std::string& text);

}  // namespace spinwave::cli
