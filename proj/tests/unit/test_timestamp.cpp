#include <doctest.h>

#include "obi/timestamp.hpp"

using namespace obi;

TEST_CASE("ISO-8601 normalization to UTC") {
    CHECK(normalize_iso8601("2010-03-01T09:30:00Z") == "2010-03-01T09:30:00Z");
    CHECK(normalize_iso8601("2010-03-02T14:00:00+05:30") == "2010-03-02T08:30:00Z");
    CHECK(normalize_iso8601("2010-03-04T22:15:00-04:00") == "2010-03-05T02:15:00Z");
    CHECK(normalize_iso8601("2010-03-03") == "2010-03-03T00:00:00Z");
    CHECK(normalize_iso8601("2010-03-03T07:05") == "2010-03-03T07:05:00Z");
    CHECK(normalize_iso8601("2010-03-03 07:05:09.250+0100") == "2010-03-03T06:05:09Z");
}

TEST_CASE("invalid timestamps") {
    for (const char* bad : {"", "2010", "2010-13-01", "2010-02-30", "2010-03-01T25:00:00Z", "2010-03-01T09:30:00Q",
                            "2010-03-01T09:30:00Z extra", "03/01/2010"})
        CHECK_MESSAGE(!parse_iso8601(bad), bad);
}
