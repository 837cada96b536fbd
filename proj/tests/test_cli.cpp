#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vanhom/builders.hpp"
#include "vanhom/cli.hpp"
#include "vanhom/document.hpp"
#include "vanhom/errors.hpp"

using namespace vanhom;
using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "vanhom-cli-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
    const auto path = scratch(name);
    std::ofstream(path) << text;
    return path.string();
}

CellId id(std::uint32_t v) { return CellId{v}; }

}  // namespace

TEST_CASE("document round trip") {
    const auto p = build_pinched_spheres(Rational(2), 3);
    auto doc = document_from(AnnotatedComplex{p.complex, p.rates}, "pinched");
    doc.subcomplexes["A"] = p.equator;
    const std::string text = dump_document(doc);
    CHECK(text.back() == '\n');
    const auto back = parse_document(text);
    CHECK(back.name == "pinched");
    CHECK(back.complex == p.complex);
    CHECK(back.rates == p.rates);
    CHECK(back.subcomplexes.at("A") == p.equator);
    CHECK(dump_document(back) == text);
}

TEST_CASE("geometry documents resolve to rates") {
    const auto g = torus_geometry(Rational(0), Rational(2), 3);
    const auto doc = document_from(g, "torus");
    REQUIRE(doc.geometry.has_value());
    CHECK(doc.rates.empty());
    const auto back = parse_document(dump_document(doc));
    REQUIRE(back.geometry.has_value());
    CHECK(back.geometry->vertices == g.vertices);
    const auto rates = resolve_rates(back, ExtRational::infinity());
    CHECK(rates == build_torus(Rational(0), Rational(2), 3).rates);
}

TEST_CASE("explicit rates shadow geometry with a warning") {
    auto doc = document_from(torus_geometry(Rational(0), Rational(2), 3), "torus");
    const CellId first_edge = doc.complex.cells_of_dim(1).front();
    doc.rates[first_edge] = ExtRational(Rational(7));
    std::vector<std::string> warnings;
    const auto rates = resolve_rates(doc, ExtRational::infinity(), &warnings);
    CHECK(rates.at(first_edge) == ExtRational(Rational(7)));
    CHECK(warnings.size() == 1);
}

TEST_CASE("missing rates without geometry") {
    auto doc = document_from(build_circle(3, ExtRational(Rational(1))), "c");
    doc.rates.erase(doc.rates.begin());
    CHECK_THROWS_AS(resolve_rates(doc, ExtRational::infinity()), MissingRate);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_document("{"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format": "other", "cells": []})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format": "vanhom-complex/1", "cells": [{"id": 0}]})"), ParseError);
    CHECK_THROWS_AS(
        parse_document(R"({"format": "vanhom-complex/1", "cells": [{"id": 1, "dim": 1, "rate": "1/0"}]})"),
        ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format": "vanhom-complex/1",
        "cells": [{"id": 0, "dim": 0}, {"id": 0, "dim": 0}]})"),
                    InvalidInput);
    CHECK_THROWS_AS(load_document(scratch("does-not-exist.json").string()), ParseError);
}

TEST_CASE("example, validate and compute") {
    const auto torus = scratch("torus.json").string();
    REQUIRE(run({"example", "torus", "--p", "0", "--q", "2", "--n", "3", "-o", torus}).code == cli::kOk);
    const auto v = run({"validate", torus});
    CHECK(v.code == cli::kOk);

    const auto r = run({"compute", torus, "--velocity", "T^2"});
    REQUIRE(r.code == cli::kOk);
    const auto j = json::parse(r.out);
    CHECK(j["velocity"] == "T^2");
    CHECK(j["betti"]["0"] == 0);
    CHECK(j["betti"]["1"] == 1);
    CHECK(j["betti"]["2"] == 1);
    CHECK(j["euler"] == 0);

    const auto oracle = run({"compute", torus, "--velocity", "T^2", "--oracle"});
    CHECK(oracle.out == r.out);

    const auto tsv = run({"compute", torus, "--velocity", ">T^2", "--format", "tsv", "--degrees", "1..2"});
    REQUIRE(tsv.code == cli::kOk);
    CHECK(tsv.out == "degree\tdimension\n1\t0\n2\t0\n");

    const auto euler = run({"euler", torus, "--velocity", "T^2"});
    CHECK(euler.code == cli::kOk);
    CHECK(json::parse(euler.out)["euler"] == 0);
}

TEST_CASE("geometry example resolves through the pipeline") {
    const auto torus = scratch("torus-geometry.json").string();
    REQUIRE(run({"example", "torus", "--p", "0", "--q", "2", "--n", "3", "--geometry", "-o", torus}).code ==
            cli::kOk);
    const auto r = run({"compute", torus, "--velocity", "T^2", "--format", "tsv"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out == "degree\tdimension\n0\t0\n1\t1\n2\t1\n");
    const auto rates = run({"rates", torus});
    CHECK(rates.code == cli::kOk);
}

TEST_CASE("sweep output") {
    const auto torus = scratch("torus-sweep.json").string();
    REQUIRE(run({"example", "torus", "--p", "0", "--q", "2", "--n", "3", "-o", torus}).code == cli::kOk);
    const auto r = run({"sweep", torus, "--degrees", "1..1"});
    REQUIRE(r.code == cli::kOk);
    const auto j = json::parse(r.out);
    const json expected = json::parse(R"([
        {"lower": "-inf", "upper": "0", "dimension": 2},
        {"lower": "0", "upper": "2", "dimension": 1},
        {"lower": "2", "upper": "inf", "dimension": 0}])");
    CHECK(j["degrees"]["1"] == expected);
}

TEST_CASE("pairs through the command line") {
    const auto pinched = scratch("pinched.json").string();
    REQUIRE(run({"example", "pinched", "--r", "2", "--n", "3", "-o", pinched}).code == cli::kOk);
    const auto rel = run({"relative", pinched, "--subcomplex", "A", "--velocity", "T^2"});
    REQUIRE(rel.code == cli::kOk);
    const auto j = json::parse(rel.out);
    CHECK(j["relative"]["1"] == 0);
    CHECK(j["boundary"]["1"] == 1);
    CHECK(j["boundary"]["0"] == 0);
    CHECK(j["exact"] == true);

    const auto les = run({"les", pinched, "--subcomplex", "A", "--velocity", "T^2"});
    REQUIRE(les.code == cli::kOk);
    CHECK(json::parse(les.out)["exact"] == true);

    CHECK(run({"relative", pinched, "--subcomplex", "B", "--velocity", "T^2"}).code == cli::kInputError);
}

TEST_CASE("excision through the command line") {
    auto doc = document_from(build_circle(6, ExtRational(Rational(2))), "circle");
    doc.subcomplexes["A"] = {id(0), id(1), id(2), id(3), id(6), id(7), id(8)};
    doc.subcomplexes["W"] = {id(1), id(6), id(7)};
    doc.subcomplexes["bad"] = {id(1)};
    const auto path = scratch("circle.json").string();
    save_document(doc, path);
    const auto ok = run({"excise", path, "--subcomplex", "A", "--excise", "W", "--velocity", "T^2"});
    REQUIRE(ok.code == cli::kOk);
    CHECK(json::parse(ok.out)["equal"] == true);
    const auto bad = run({"excise", path, "--subcomplex", "A", "--excise", "bad", "--velocity", "T^2"});
    CHECK(bad.code == cli::kPreconditionError);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("exit codes") {
    CHECK(run({"compute", scratch("missing.json").string(), "--velocity", "T"}).code == cli::kInputError);
    const auto bad_json = write("bad.json", "{ not json");
    CHECK(run({"validate", bad_json}).code == cli::kInputError);

    const auto torus = scratch("torus-codes.json").string();
    REQUIRE(run({"example", "torus", "--p", "0", "--q", "2", "--n", "3", "-o", torus}).code == cli::kOk);
    CHECK(run({"compute", torus, "--velocity", "T2"}).code == cli::kInputError);
    CHECK(run({"bogus"}).code == cli::kInputError);

    // A vertex coordinate known only to O(T) cannot decide a rate-2 edge.
    const auto fuzzy = write("fuzzy.json", R"json({
  "format": "vanhom-complex/1",
  "name": "fuzzy",
  "cells": [
    {"id": 0, "dim": 0, "boundary": []},
    {"id": 1, "dim": 0, "boundary": []},
    {"id": 2, "dim": 1, "boundary": [[1, 1], [-1, 0]]}
  ],
  "geometry": {"ambient_dim": 1, "vertices": {"0": ["0"], "1": ["O(T)"]}}
})json");
    CHECK(run({"compute", fuzzy, "--velocity", "T^2"}).code == cli::kPrecisionError);

    const auto pinched = scratch("pinched-codes.json").string();
    REQUIRE(run({"example", "pinched", "--r", "2", "--n", "3", "-o", pinched}).code == cli::kOk);
    auto doc = load_document(pinched);
    doc.subcomplexes["open"] = {doc.complex.cells_of_dim(1).front()};
    save_document(doc, pinched);
    CHECK(run({"relative", pinched, "--subcomplex", "open", "--velocity", "T^2"}).code ==
          cli::kPreconditionError);
}

TEST_CASE("stdout output and determinism") {
    const auto a = run({"example", "circle", "--n", "4", "--rate", "inf"});
    REQUIRE(a.code == cli::kOk);
    const auto doc = parse_document(a.out);
    CHECK(doc.complex.size() == 8);
    for (const auto& [cid, r] : doc.rates) CHECK(r.is_infinite());
    CHECK(run({"example", "circle", "--n", "4", "--rate", "inf", "-o", "-"}).out == a.out);
}
