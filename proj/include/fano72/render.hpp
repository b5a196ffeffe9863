#pragma once

#include <string>
#include <string_view>

#include "fano72/pipeline.hpp"

namespace fano72::render {

enum class Format { markdown, csv, json };

/// Accepts "md", "markdown", "csv", "json". Throws std::invalid_argument otherwise.
Format parse_format(std::string_view text);

/// Table 1..5 of a certificate. Throws std::invalid_argument for other selectors.
std::string table(int which, const pipeline::Certificate& cert, Format format);

/// Full certificate: key-sorted JSON, newline-terminated.
std::string certificate_json(const pipeline::Certificate& cert);

/// One line per survivor; empty when the certificate is bounded.
std::string survivor_listing(const pipeline::Certificate& cert);

}  // namespace fano72::render
