#include "obi/timestamp.hpp"

#include <charconv>
#include <cstdio>

namespace obi {
namespace {

bool read_int(std::string_view s, std::size_t pos, std::size_t width, int& out) {
    if (pos + width > s.size())
        return false;
    for (std::size_t i = pos; i < pos + width; ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    std::from_chars(s.data() + pos, s.data() + pos + width, out);
    return true;
}

} // namespace

std::optional<UtcTime> parse_iso8601(std::string_view s) {
    using namespace std::chrono;
    int y = 0, mo = 0, d = 0, hh = 0, mm = 0, ss = 0;
    if (!read_int(s, 0, 4, y) || s.size() < 10 || s[4] != '-' || !read_int(s, 5, 2, mo) || s[7] != '-' ||
        !read_int(s, 8, 2, d))
        return std::nullopt;
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok())
        return std::nullopt;

    std::size_t pos = 10;
    int offset_minutes = 0;
    if (pos < s.size()) {
        if (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' ')
            return std::nullopt;
        ++pos;
        if (!read_int(s, pos, 2, hh) || pos + 2 >= s.size() || s[pos + 2] != ':' || !read_int(s, pos + 3, 2, mm))
            return std::nullopt;
        pos += 5;
        if (pos < s.size() && s[pos] == ':') {
            if (!read_int(s, pos + 1, 2, ss))
                return std::nullopt;
            pos += 3;
            if (pos < s.size() && (s[pos] == '.' || s[pos] == ',')) {
                std::size_t digits = 0;
                ++pos;
                while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
                    ++pos;
                    ++digits;
                }
                if (digits == 0)
                    return std::nullopt;
            }
        }
        if (hh > 23 || mm > 59 || ss > 60)
            return std::nullopt;
        if (pos < s.size()) {
            if (s[pos] == 'Z' || s[pos] == 'z') {
                ++pos;
            } else if (s[pos] == '+' || s[pos] == '-') {
                const int sign = s[pos] == '-' ? -1 : 1;
                int oh = 0, om = 0;
                if (!read_int(s, pos + 1, 2, oh))
                    return std::nullopt;
                pos += 3;
                if (pos < s.size() && s[pos] == ':')
                    ++pos;
                if (!read_int(s, pos, 2, om))
                    return std::nullopt;
                pos += 2;
                if (oh > 23 || om > 59)
                    return std::nullopt;
                offset_minutes = sign * (oh * 60 + om);
            } else {
                return std::nullopt;
            }
        }
        if (pos != s.size())
            return std::nullopt;
    }
    return sys_days{ymd} + hours{hh} + minutes{mm} + seconds{ss} - minutes{offset_minutes};
}

std::string format_utc(UtcTime t) {
    using namespace std::chrono;
    const auto day_point = floor<days>(t);
    const year_month_day ymd{day_point};
    const hh_mm_ss hms{t - day_point};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                  static_cast<int>(hms.seconds().count()));
    return buf;
}

std::optional<std::string> normalize_iso8601(std::string_view text) {
    if (auto t = parse_iso8601(text))
        return format_utc(*t);
    return std::nullopt;
}

} // namespace obi
