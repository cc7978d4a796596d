#ifndef SCROLLSMITH_CERTIFICATES_HPP
#define SCROLLSMITH_CERTIFICATES_HPP

#include <optional>

#include "scrollsmith/construct.hpp"
#include "scrollsmith/cubic.hpp"
#include "scrollsmith/json_io.hpp"

namespace scrollsmith {

constexpr int kCertificateSchemaVersion = 1;

Json scroll_report_to_json(const SingularScrollReport& rep);
Json deformation_to_json(const FanoDeformationReport& rep);
Json classification_to_json(const CubicClassification& cls);
Json construct_result_to_json(const ConstructResult& res);

struct VerifyOptions {
    std::vector<uint64_t> primes{31};
    uint64_t seed = 0;
    /// when set, the certificate requires at least this many pairs per prime
    std::optional<int64_t> expect_min_pairs;
};

/// Full verification certificate for one projection: pair scan, containing
/// cubics, smooth/singular search, deformation system, numeric invariants.
/// The "verdict" field is "PASS" or "FAIL".
Json run_verify(const ProjectionMatrix& proj, const VerifyOptions& opt);

/// The reference-example certificate: runs the pipeline on the shipped
/// projection and checks every expected value (8 pairs, 8 points, 6 cubics,
/// smooth + singular members, deformation 66/58/53/2, invariants 41/42/13,
/// section bookkeeping 58 -> 50 -> 6).
Json run_reference_example(uint64_t seed, const std::vector<uint64_t>& primes);

/// Formula table for the dims command.
Json dims_table(int64_t D, int64_t N, std::optional<int64_t> r, std::optional<int64_t> j,
                std::optional<int64_t> u);

/// Plan listing for the foursquare command.
Json foursquare_table(int r, int v);

}  // namespace scrollsmith

#endif
