#include "epm/ingest.hpp"

#include <algorithm>
#include <filesystem>

#include "epm/csv.hpp"

namespace epm {

const char* kEventFileHeader = "timestamp_us,type,price,quantity,side,buyer_cat,seller_cat,bid,ask";

void parse_event_filename(const std::string& filename, std::string& stock, int& date) {
    std::string base = std::filesystem::path(filename).stem().string();
    auto us = base.rfind('_');
    if (us == std::string::npos || us == 0 || base.size() - us - 1 != 8)
        throw std::runtime_error("event file name must be <STOCK>_<YYYYMMDD>.csv: " + filename);
    stock = base.substr(0, us);
    date = std::stoi(base.substr(us + 1));
    if (!valid_date(date))
        throw std::runtime_error("bad date in event file name: " + filename);
}

std::string event_filename(const std::string& stock, int date) {
    return stock + "_" + std::to_string(date) + ".csv";
}

DayTape load_day_file(const std::string& path, const SessionSpec& session) {
    DayTape tape;
    parse_event_filename(path, tape.stock, tape.date);

    CsvReader reader(path);
    std::vector<std::string_view> f;
    if (!reader.next(f) || f.size() != 9 || f[0] != "timestamp_us")
        reader.fail("expected header: " + std::string(kEventFileHeader));

    Micros last_ts = -1;
    const Micros session_len = session.length_us();
    while (reader.next(f)) {
        if (f.size() == 1 && f[0].empty()) continue;  // trailing blank line
        if (f.size() != 9) reader.fail("expected 9 columns, got " + std::to_string(f.size()));
        Micros ts = parse_int(f[0], reader, "timestamp_us");
        if (ts < 0 || ts > session_len)
            reader.fail("timestamp outside session [0, " + std::to_string(session_len) + "]");
        if (ts < last_ts) reader.fail("timestamps must be non-decreasing");
        last_ts = ts;

        if (f[1] == "TRADE") {
            TradeEvent t;
            t.ts = ts;
            t.price = parse_double(f[2], reader, "price");
            t.quantity = parse_double(f[3], reader, "quantity");
            std::int64_t side = parse_int(f[4], reader, "side");
            if (t.price <= 0) reader.fail("trade price must be > 0");
            if (t.quantity <= 0) reader.fail("trade quantity must be > 0");
            if (side != 1 && side != -1) reader.fail("side must be 1 or -1");
            t.side = static_cast<int>(side);
            t.buyer = parse_category(f[5]);
            t.seller = parse_category(f[6]);
            if ((t.buyer == TraderCategory::Other && f[5] != "OTHER") ||
                (t.seller == TraderCategory::Other && f[6] != "OTHER"))
                ++tape.other_category_warnings;
            if (!f[7].empty() || !f[8].empty()) reader.fail("TRADE rows must leave bid/ask empty");
            tape.trades.push_back(t);
        } else if (f[1] == "QUOTE") {
            QuoteEvent q;
            q.ts = ts;
            q.bid = parse_double(f[7], reader, "bid");
            q.ask = parse_double(f[8], reader, "ask");
            if (q.bid <= 0) reader.fail("bid must be > 0");
            if (q.ask <= q.bid) reader.fail("ask must exceed bid");
            if (!f[2].empty() || !f[3].empty() || !f[4].empty() || !f[5].empty() || !f[6].empty())
                reader.fail("QUOTE rows must leave trade columns empty");
            tape.quotes.push_back(q);
        } else {
            reader.fail("type must be TRADE or QUOTE");
        }
    }
    return tape;
}

void write_day_file(const std::string& path, const DayTape& tape) {
    CsvWriter w(path);
    w.raw_line(kEventFileHeader);
    size_t it = 0, iq = 0;
    // Interleave by timestamp, trades first on ties (stable canonical order).
    while (it < tape.trades.size() || iq < tape.quotes.size()) {
        bool take_trade;
        if (it == tape.trades.size())
            take_trade = false;
        else if (iq == tape.quotes.size())
            take_trade = true;
        else
            take_trade = tape.trades[it].ts <= tape.quotes[iq].ts;
        if (take_trade) {
            const auto& t = tape.trades[it++];
            w.row({std::to_string(t.ts), "TRADE", format_fixed(t.price, 3),
                   format_fixed(t.quantity, 0), std::to_string(t.side),
                   std::string(category_name(t.buyer)), std::string(category_name(t.seller)), "", ""});
        } else {
            const auto& q = tape.quotes[iq++];
            w.row({std::to_string(q.ts), "QUOTE", "", "", "", "", "",
                   format_fixed(q.bid, 3), format_fixed(q.ask, 3)});
        }
    }
}

namespace {

bool looks_like_event_file(const std::string& path) {
    std::string stock;
    int date = 0;
    try {
        parse_event_filename(path, stock, date);
    } catch (const std::exception&) {
        return false;  // sidecar files (e.g. truth.csv) live next to event files
    }
    return true;
}

}  // namespace

std::vector<DayTape> load_directory(const std::string& dir, const SessionSpec& session) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".csv" &&
            looks_like_event_file(entry.path().string()))
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    std::vector<DayTape> tapes;
    tapes.reserve(files.size());
    for (const auto& f : files) tapes.push_back(load_day_file(f, session));
    std::sort(tapes.begin(), tapes.end(), [](const DayTape& a, const DayTape& b) {
        return std::tie(a.stock, a.date) < std::tie(b.stock, b.date);
    });
    return tapes;
}

}  // namespace epm
