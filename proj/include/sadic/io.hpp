#pragma once

#include "sadic/cf.hpp"
#include "sadic/coincidence.hpp"
#include "sadic/directive.hpp"
#include "sadic/dynamics.hpp"
#include "sadic/fractal.hpp"
#include "sadic/geometry.hpp"
#include "sadic/lyapunov.hpp"
#include "sadic/symbolic.hpp"

#include <string>

namespace sadic {

// Substitutions: one `i:word` line per letter.
std::string format_substitution(const Substitution& s);
Substitution parse_substitution(const std::string& text);

// Matrices: row-major CSV of decimal integers.
std::string format_matrix_csv(const IntMat& m);
IntMat parse_matrix_csv(const std::string& text);

// Vectors: CSV.
std::string format_vector_csv(const RealVec& v);

// Patches: one `x1,...,xd,i` row per face.
std::string format_patch_csv(const Patch& p);
Patch parse_patch_csv(const std::string& text, int d);

// Clouds: one `p1,...,pd,label` row per point.
std::string format_cloud_csv(const LabeledCloud& c);

// Directive sequences: whitespace-separated generator tokens a1..a3 (Arnoux-
// Rauzy), b1..b3 (Brun), s1..s3 (the alternative Brun family), with an
// optional `periodic:` marker starting the repeated block, or `brun: x1 x2`
// for an expansion-driven sequence.
DirectiveSequence parse_directive_spec(const std::string& spec);

// JSON payloads.
std::string histogram_json(const CoverHistogram& h);
std::string coding_report_json(const CodingReport& r);
std::string lyapunov_report_json(const LyapunovReport& r, const PisotCheck& check);
std::string price_report_json(const PriceReport& r);
std::string discrepancy_json(const RealVec& per_letter, long balance);
std::string expansion_json(const BrunExpansion& e);

// Coincidence witnesses round-trip (the sequence spec is embedded so a
// witness re-verifies from the file alone).
std::string coincidence_witness_json(const CoincidenceWitness& w, const std::string& seq_spec);
std::string geometric_witness_json(const GeometricWitness& w, const std::string& seq_spec);
std::string finiteness_json(const DirectiveSequence& seq, std::size_t n, long radius, bool holds,
                            const std::string& seq_spec);

// Re-verify any witness emitted by the functions above; returns true when the
// certificate still holds. Throws on malformed input.
bool reverify_witness_json(const std::string& json_text);

}  // namespace sadic
