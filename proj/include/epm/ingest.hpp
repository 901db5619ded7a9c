#pragma once

#include <string>
#include <vector>

#include "epm/events.hpp"

namespace epm {

// Event files are UTF-8 CSV with a header row and columns
//   timestamp_us,type,price,quantity,side,buyer_cat,seller_cat,bid,ask
// TRADE rows leave bid/ask empty; QUOTE rows leave the trade columns empty.
// One file per (stock, date), named <STOCK>_<YYYYMMDD>.csv.

extern const char* kEventFileHeader;

// Parses "<STOCK>_<YYYYMMDD>" from a filename; throws on mismatch.
void parse_event_filename(const std::string& filename, std::string& stock, int& date);
std::string event_filename(const std::string& stock, int date);

// Loads and validates one event file. Malformed rows and non-monotone
// timestamps raise CsvError with the offending line; unknown trader categories
// map to Other and bump `other_category_warnings`.
DayTape load_day_file(const std::string& path, const SessionSpec& session);

// Canonical serialization; load_day_file(write_day_file(t)) is byte-stable.
void write_day_file(const std::string& path, const DayTape& tape);

// Loads every *.csv in `dir`, sorted by (stock, date).
std::vector<DayTape> load_directory(const std::string& dir, const SessionSpec& session);

}  // namespace epm
