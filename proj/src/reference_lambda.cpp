#include "scrollsmith/reference_lambda.hpp"

#include "scrollsmith/json_io.hpp"

namespace scrollsmith {

namespace {

// Columns are the six projection vectors; rows follow the homogeneous
// coordinates x0..x10 of the ambient P^10.
const char* const kLambdaAsset = R"({
  "schema_version": 1,
  "name": "degree9-eightnode-projection",
  "matrix": {
    "rows": 11,
    "cols": 6,
    "modulus": null,
    "entries": [
      ["0", "0", "0", "0", "1", "0"],
      ["0", "0", "0", "0", "0", "1"],
      ["0", "2880", "0", "0", "1", "1"],
      ["120", "5184", "480", "144", "1", "0"],
      ["-34", "-2372", "304", "36", "1", "0"],
      ["-203", "-2196", "-510", "-196", "1", "0"],
      ["91", "633", "-339", "-49", "1", "0"],
      ["70", "261", "30", "56", "1", "0"],
      ["-56", "-63", "36", "14", "1", "0"],
      ["13", "-9", "0", "-4", "1", "0"],
      ["-1", "2", "-1", "-1", "1", "0"]
    ]
  }
})";

constexpr uint64_t kLambdaChecksum = 0xd37b1ead921ce1e8ULL;

}  // namespace

uint64_t fnv1a64(const std::string& text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const std::string& reference_lambda_json() {
    static const std::string asset(kLambdaAsset);
    return asset;
}

uint64_t reference_lambda_checksum() { return kLambdaChecksum; }

ScrollSpec reference_scroll_spec() { return ScrollSpec{1, 8, 5}; }

ProjectionMatrix reference_projection() {
    const std::string& text = reference_lambda_json();
    if (fnv1a64(text) != kLambdaChecksum)
        throw Error("reference projection asset failed its transcription checksum");
    auto doc = json_parse(text);
    ExactMatrix m = matrix_from_json(doc.at("matrix"));
    return ProjectionMatrix(reference_scroll_spec(), std::move(m));
}

}  // namespace scrollsmith
