#include "casefs/util/time.hpp"

#include <chrono>
#include <cstdio>

namespace casefs::util {

namespace {

// Civil-calendar conversions (Howard Hinnant's algorithms), valid across
// the full int64 millisecond range we care about.
int64_t daysFromCivil(int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civilFromDays(int64_t z, int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += (m <= 2);
}

}  // namespace

int64_t nowMillis() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::string formatRfc3339Ms(int64_t epochMillis) {
    int64_t ms = epochMillis % 1000;
    int64_t secs = epochMillis / 1000;
    if (ms < 0) {
        ms += 1000;
        secs -= 1;
    }
    int64_t days = secs / 86400;
    int64_t sod = secs % 86400;
    if (sod < 0) {
        sod += 86400;
        days -= 1;
    }
    int64_t year;
    unsigned month, day;
    civilFromDays(days, year, month, day);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ",
                  static_cast<long long>(year), month, day,
                  static_cast<long long>(sod / 3600),
                  static_cast<long long>((sod / 60) % 60),
                  static_cast<long long>(sod % 60), static_cast<long long>(ms));
    return buf;
}

std::optional<int64_t> parseRfc3339Ms(const std::string& text) {
    // YYYY-MM-DDTHH:MM:SS[.fff...]Z
    if (text.size() < 20) return std::nullopt;
    auto digit = [&](size_t i) -> int {
        char c = text[i];
        return (c >= '0' && c <= '9') ? c - '0' : -1;
    };
    auto num = [&](size_t pos, size_t len) -> int64_t {
        int64_t v = 0;
        for (size_t i = pos; i < pos + len; ++i) {
            int d = digit(i);
            if (d < 0) return -1;
            v = v * 10 + d;
        }
        return v;
    };
    if (text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != 't') ||
        text[13] != ':' || text[16] != ':') {
        return std::nullopt;
    }
    int64_t year = num(0, 4), month = num(5, 2), day = num(8, 2);
    int64_t hh = num(11, 2), mm = num(14, 2), ss = num(17, 2);
    if (year < 0 || month < 1 || month > 12 || day < 1 || day > 31) return std::nullopt;
    if (hh < 0 || hh > 23 || mm < 0 || mm > 59 || ss < 0 || ss > 60) return std::nullopt;

    size_t pos = 19;
    int64_t millis = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        int seen = 0;
        int64_t frac = 0;
        while (pos < text.size() && digit(pos) >= 0) {
            if (seen < 3) frac = frac * 10 + digit(pos);
            ++seen;
            ++pos;
        }
        if (seen == 0) return std::nullopt;
        while (seen < 3) {
            frac *= 10;
            ++seen;
        }
        millis = frac;
    }
    if (pos + 1 != text.size() || (text[pos] != 'Z' && text[pos] != 'z')) return std::nullopt;

    int64_t days = daysFromCivil(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
    return ((days * 86400 + hh * 3600 + mm * 60 + ss) * 1000) + millis;
}

}  // namespace casefs::util
