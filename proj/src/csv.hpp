#pragma once

// Minimal RFC 4180 reader/writer shared by the dataset and table formats.

#include <string>
#include <string_view>
#include <vector>

namespace wif::csv {

using Row = std::vector<std::string>;

/// Splits `text` into rows; quoted fields may hold commas, quotes ("") and
/// newlines. Blank lines are skipped. Throws ParseError on an unterminated
/// quote.
std::vector<Row> parse(std::string_view text);

/// Quotes the field when it contains a comma, quote or newline.
std::string escape(std::string_view field);

std::string join(const Row &row);

} // namespace wif::csv
