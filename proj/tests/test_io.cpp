#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "fdbench/csv_io.hpp"
#include "fdbench/errors.hpp"
#include "fdbench/svg.hpp"

using namespace fdbench;

TEST_CASE("csv parsing") {
    SUBCASE("basic file") {
        std::istringstream in("t,value\n0,1.5\n1,2.5\n2,nan\n");
        const Series s = read_series_csv(in);
        REQUIRE(s.size() == 3);
        CHECK(s.times[1] == 1.0);
        CHECK(s.values[1] == 2.5);
        CHECK(is_missing(s.values[2]));
    }
    SUBCASE("blank lines and whitespace tolerated") {
        std::istringstream in("\n t,value \r\n\n 0 , 1 \n\n1,2\n");
        const Series s = read_series_csv(in);
        REQUIRE(s.size() == 2);
        CHECK(s.values[0] == 1.0);
    }
    SUBCASE("scientific notation") {
        std::istringstream in("t,value\n0,3.282e-08\n10,-1.5E2\n");
        const Series s = read_series_csv(in);
        CHECK(s.values[0] == 3.282e-08);
        CHECK(s.values[1] == -150.0);
    }
    SUBCASE("missing header") {
        std::istringstream in("0,1\n1,2\n");
        CHECK_THROWS_AS(read_series_csv(in), ParseError);
    }
    SUBCASE("empty input") {
        std::istringstream in("");
        CHECK_THROWS_AS(read_series_csv(in), ParseError);
    }
    SUBCASE("malformed value reports the line number") {
        std::istringstream in("t,value\n0,1\n1,abc\n");
        try {
            read_series_csv(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(std::string(e.what()).find("abc") != std::string::npos);
        }
    }
    SUBCASE("wrong field count") {
        std::istringstream one("t,value\n0\n");
        CHECK_THROWS_AS(read_series_csv(one), ParseError);
        std::istringstream three("t,value\n0,1,2\n");
        CHECK_THROWS_AS(read_series_csv(three), ParseError);
    }
    SUBCASE("nan time is rejected") {
        std::istringstream in("t,value\nnan,1\n");
        CHECK_THROWS_AS(read_series_csv(in), ParseError);
    }
    SUBCASE("non-increasing times are rejected") {
        std::istringstream dup("t,value\n0,1\n0,2\n");
        CHECK_THROWS_AS(read_series_csv(dup), GridError);
        std::istringstream dec("t,value\n0,1\n-1,2\n");
        CHECK_THROWS_AS(read_series_csv(dec), GridError);
    }
}

TEST_CASE("csv writing round-trips values exactly") {
    Series s;
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    double t = 0;
    for (int i = 0; i < 50; ++i) {
        t += std::abs(dist(rng)) / 1e6 + 1e-9;
        s.times.push_back(t);
        s.values.push_back(i % 7 == 0 ? missing_sentinel() : dist(rng));
    }
    const std::string text = series_to_csv(s);
    std::istringstream in(text);
    const Series back = read_series_csv(in);
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(back.times[i] == s.times[i]);
        if (is_missing(s.values[i]))
            CHECK(is_missing(back.values[i]));
        else
            CHECK(back.values[i] == s.values[i]);
    }

    SUBCASE("writing the read-back reproduces the bytes") {
        CHECK(series_to_csv(back) == text);
    }
}

TEST_CASE("file level IO") {
    const std::string path = "test_io_series.csv";
    Series s;
    s.times = {0, 1, 2};
    s.values = {1.5, 2.5, 3.5};
    write_series_csv_file(s, path);
    const Series back = read_series_csv_file(path);
    CHECK(back.values == s.values);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_series_csv_file("no_such_file_here.csv"), Error);

    SUBCASE("atomic write leaves no temp file behind") {
        write_file_atomic(path, "hello\n");
        std::ifstream tmp(path + ".tmp");
        CHECK_FALSE(tmp.good());
        std::ifstream out(path);
        std::string content((std::istreambuf_iterator<char>(out)),
                            std::istreambuf_iterator<char>());
        CHECK(content == "hello\n");
        std::remove(path.c_str());
    }
}

TEST_CASE("svg line chart") {
    ChartCurve a;
    a.label = "analytic";
    a.data.times = {0, 1, 2, 3, 4};
    a.data.values = {0.0, 1.0, 4.0, 9.0, 16.0};
    ChartCurve b;
    b.label = "estimate";
    b.data.times = {0, 1, 2, 3, 4};
    b.data.values = {0.1, 1.1, missing_sentinel(), 9.1, 16.1};

    const std::string svg =
        render_line_chart("rates", "hours", "degC/hour", {a, b});

    SUBCASE("well formed document") {
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("version=\"1.1\"") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
        CHECK(svg.find("rates") != std::string::npos);
        CHECK(svg.find("hours") != std::string::npos);
        CHECK(svg.find("degC/hour") != std::string::npos);
    }
    SUBCASE("one polyline per contiguous run") {
        std::size_t count = 0;
        for (std::size_t pos = svg.find("<polyline");
             pos != std::string::npos; pos = svg.find("<polyline", pos + 1))
            ++count;
        // curve a unbroken, curve b split in two by the missing value
        CHECK(count == 3);
    }
    SUBCASE("legend labels present and escaped") {
        CHECK(svg.find("analytic") != std::string::npos);
        ChartCurve esc = a;
        esc.label = "a<b&c";
        const std::string s2 = render_line_chart("t", "x", "y", {esc});
        CHECK(s2.find("a&lt;b&amp;c") != std::string::npos);
        CHECK(s2.find("a<b&c") == std::string::npos);
    }
    SUBCASE("byte stable across calls") {
        CHECK(render_line_chart("rates", "hours", "degC/hour", {a, b}) == svg);
    }
    SUBCASE("no external references or timestamps") {
        CHECK(svg.find("http-equiv") == std::string::npos);
        CHECK(svg.find("<image") == std::string::npos);
        CHECK(svg.find("<script") == std::string::npos);
    }
}
