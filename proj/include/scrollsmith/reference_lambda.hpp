#ifndef SCROLLSMITH_PAPER_LAMBDA_HPP
#define SCROLLSMITH_PAPER_LAMBDA_HPP

#include <string>

#include "scrollsmith/scroll.hpp"

namespace scrollsmith {

/// The reference 11 x 6 projection for the degree-9 scroll with eight
/// double points, shipped as a versioned data asset. The transcription is
/// guarded by a checksum verified at load time.
const std::string& reference_lambda_json();

/// FNV-1a 64 checksum of the asset text.
uint64_t reference_lambda_checksum();

/// Parsed asset (rational context, full column rank).
ProjectionMatrix reference_projection();

/// Scroll type of the asset: (1, 8) in P^5.
ScrollSpec reference_scroll_spec();

uint64_t fnv1a64(const std::string& text);

}  // namespace scrollsmith

#endif
