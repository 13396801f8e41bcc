#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "sbe/csv.hpp"

TEST_CASE("doubles render as shortest round-trip strings") {
    CHECK(sbe::fmt_double(0.1) == "0.1");
    CHECK(sbe::fmt_double(1.0) == "1");
    CHECK(sbe::fmt_double(-2.5) == "-2.5");
    CHECK(sbe::fmt_double(0.0) == "0");

    // round-trip property on awkward values
    for (double v : {1.0 / 3.0, 6.02214076e23, 1e-300, 123456789.123456789}) {
        std::string s = sbe::fmt_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(sbe::fmt_int(-42) == "-42");
    CHECK(sbe::fmt_int(1) == "1");
}

TEST_CASE("cells are quoted exactly when rfc 4180 requires it") {
    CHECK(sbe::csv_quote("plain") == "plain");
    CHECK(sbe::csv_quote("has space") == "has space");
    CHECK(sbe::csv_quote("a,b") == "\"a,b\"");
    CHECK(sbe::csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(sbe::csv_quote("line\nbreak") == "\"line\nbreak\"");
    CHECK(sbe::csv_quote("") == "");
}

TEST_CASE("tables enforce arity and render header plus rows") {
    sbe::CsvTable t("demo", {"a", "b"});
    t.row({"1", "x,y"});
    t.row({"2", "z"});
    CHECK(t.rows() == 2);
    CHECK(t.name() == "demo");
    CHECK(t.render() == "a,b\n1,\"x,y\"\n2,z\n");
    CHECK_THROWS_AS(t.row({"only-one"}), std::invalid_argument);
}

TEST_CASE("sha-256 known answers") {
    CHECK(sbe::sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sbe::sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sbe::sha256_hex("The quick brown fox jumps over the lazy dog") ==
          "d7a8fbb307d7809469ca9abcb0082e4f8d5651e46d3cdb762d02d0bf37c9e592");
}
