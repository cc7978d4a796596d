#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "scrollsmith/certificates.hpp"
#include "scrollsmith/json_io.hpp"
#include "scrollsmith/reference_lambda.hpp"
#include "scrollsmith/rng.hpp"
#include "test_util.hpp"

using namespace scrollsmith;
using testutil::random_matrix;
using testutil::random_poly;

TEST_CASE("matrix json round trip") {
    SplitMix64 rng(90);
    for (int trial = 0; trial < 10; ++trial) {
        uint64_t mod = (trial % 2) ? 31 : 0;
        ExactMatrix m = random_matrix(rng, 3 + rng.below(3), 2 + rng.below(4), mod);
        Json j = matrix_to_json(m);
        CHECK(matrix_from_json(j) == m);
        // serialized text survives reparsing too
        CHECK(matrix_from_json(json_parse(j.dump())) == m);
    }
    // rationals as "a/b" with signs
    Json j = json_parse(R"({"rows":1,"cols":2,"modulus":null,"entries":[["-3/2","7"]]})");
    ExactMatrix m = matrix_from_json(j);
    CHECK(m.at(0, 0).str() == "-3/2");
    CHECK(m.at(0, 1).str() == "7");

    Json bad = json_parse(R"({"rows":2,"cols":1,"modulus":null,"entries":[["1"]]})");
    CHECK_THROWS_AS(matrix_from_json(bad), Error);
}

TEST_CASE("ideal json round trip") {
    SplitMix64 rng(91);
    for (int trial = 0; trial < 6; ++trial) {
        uint64_t mod = (trial % 2) ? 31 : 0;
        std::vector<MultiPoly> gens = {random_poly(rng, 3, 3, 4, mod),
                                       random_poly(rng, 3, 2, 3, mod)};
        Json j = ideal_to_json(gens, {"x", "y", "z"});
        auto back = ideal_from_json(j);
        REQUIRE(back.size() == gens.size());
        for (size_t i = 0; i < gens.size(); ++i) CHECK(back[i] == gens[i]);
    }
}

TEST_CASE("atomic file write and read") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "scrollsmith-io-test";
    std::filesystem::create_directories(dir);
    std::string path = (dir / "out.json").string();
    write_file_atomic(path, "{\"k\": 1}\n");
    CHECK(read_file(path) == "{\"k\": 1}\n");
    write_file_atomic(path, "{\"k\": 2}\n");
    CHECK(read_file(path) == "{\"k\": 2}\n");
    CHECK(!std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("certificates are bit-for-bit reproducible") {
    Json a = run_reference_example(0, {31});
    Json b = run_reference_example(0, {31});
    CHECK(a.dump() == b.dump());
    CHECK(a.at("verdict") == "PASS");

    ProjectionMatrix ref = reference_projection();
    VerifyOptions opt;
    opt.primes = {31};
    opt.seed = 7;
    opt.expect_min_pairs = 8;
    Json v1 = run_verify(ref, opt);
    Json v2 = run_verify(reference_projection(), opt);
    CHECK(v1.dump() == v2.dump());
    CHECK(v1.at("verdict") == "PASS");
}

TEST_CASE("reference certificate passes at a second prime") {
    Json cert = run_reference_example(0, {31, 101});
    CHECK(cert.at("verdict") == "PASS");
    REQUIRE(cert.at("per_prime").size() == 2);
    for (const auto& sec : cert.at("per_prime")) {
        CHECK(sec.at("singular_pairs").at("pair_count").get<int>() == 8);
        CHECK(sec.at("cubics_dim").get<int>() == 6);
        CHECK(sec.at("deformation").at("rank").get<int>() == 53);
    }
}

TEST_CASE("reference asset transcription") {
    CHECK(fnv1a64(reference_lambda_json()) == reference_lambda_checksum());
    ProjectionMatrix ref = reference_projection();
    CHECK(ref.lambda.rows() == 11);
    CHECK(ref.lambda.cols() == 6);
    CHECK(ref.lambda.rank() == 6);
    CHECK(ref.spec.u == 1);
    CHECK(ref.spec.v == 8);
    CHECK(ref.spec.N == 5);
    // spot entries
    CHECK(ref.lambda.at(3, 0) == Scalar::of_int(120, 0));
    CHECK(ref.lambda.at(2, 1) == Scalar::of_int(2880, 0));
    CHECK(ref.lambda.at(10, 5).is_zero());
    CHECK(ref.lambda.at(0, 4).is_one());
    auto doc = json_parse(reference_lambda_json());
    CHECK(doc.at("schema_version").get<int>() == 1);
}
