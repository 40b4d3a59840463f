#pragma once

#include <string>

#include "crossprod/stably_free.hpp"

namespace crossprod {

/// Certificates are plain UTF-8 text with a stable key order, LF endings, and
/// a trailing content hash. `verify_certificate` re-derives every recorded
/// value from the embedded presentation; a rerun of the emitting command is
/// bit-identical.

std::string certificate_unimodular_row(const UnimodularRow& row,
                                       const AlgebraPresentation& pres);

std::string certificate_stable_freeness(const StableFreenessWitness& witness,
                                        const AlgebraPresentation& pres);

std::string certificate_intersection_ideal(const IdealSpec& ideal,
                                           const AlgebraPresentation& pres);

std::string certificate_noncyclicity(const IdealSpec& ideal, const NonCyclicityCertificate& cert,
                                     const AlgebraPresentation& pres);

struct VerifyResult {
    bool ok = false;
    std::string kind;
    std::string reason;  // empty when ok
};

/// Re-checks a serialized certificate: content hash, presentation hash, and
/// every mathematical identity or dimension it records.
VerifyResult verify_certificate(const std::string& text);

}  // namespace crossprod
