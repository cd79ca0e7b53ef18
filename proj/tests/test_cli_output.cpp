#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "wrt/output.hpp"
#include "wrt/tables.hpp"

using namespace wrt;

TEST_CASE("record formats") {
    OutputRecord rec;
    rec.p = {2, 3, 5};
    rec.N = 100;
    rec.add("tau", Complex::of(Rational(1, 3), Rational(-2, 7), 128));
    rec.prec_bits = 128;

    std::string text = format_record(rec, OutputFormat::text);
    CHECK(text.find("p = 2 3 5") != std::string::npos);
    CHECK(text.find("N = 100") != std::string::npos);
    CHECK(text.find("tau_re = ") != std::string::npos);

    std::string csv = format_record(rec, OutputFormat::csv);
    CHECK(csv.find("p,N,tau_re,tau_im,prec_bits,elapsed_ms") != std::string::npos);

    CHECK_THROWS_AS(parse_format("yaml"), validation_error);
}

TEST_CASE("json round-trips byte-identically") {
    OutputRecord rec;
    rec.p = {2, 3, 5, 7, 11};
    rec.N = 100;
    rec.add("tau", Complex::of(Rational(22, 7), Rational(-1, 9), 128));
    rec.add("Z", Complex::of(Rational(5, 3), Rational(8, 11), 128));
    rec.prec_bits = 128;
    std::string out = format_record(rec, OutputFormat::json);
    auto parsed = nlohmann::ordered_json::parse(out);
    CHECK(parsed.dump() + "\n" == out);
    CHECK(parsed["N"] == 100);
    CHECK(parsed["prec_bits"] == 128);
}

TEST_CASE("printed-value parsing and matching") {
    CHECK(printed_value("-13.346013") == Rational(-13346013, 1000000));
    CHECK(printed_ulp("-13.346013") == Rational(1, 1000000));
    CHECK(printed_value("321128.") == Rational(321128));
    CHECK(printed_ulp("321128.") == Rational(1));

    Real v = Real::of(Rational(-13346013, 1000000) + Rational(1, 2000000), 128);
    CHECK(matches_printed(v, "-13.346013", 128));
    Real far = Real::of(Rational(-13346013, 1000000) + Rational(3, 1000000), 128);
    CHECK(!matches_printed(far, "-13.346013", 128));
}
