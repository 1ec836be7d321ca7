#pragma once

#include <string>
#include <vector>

#include "sympindex/blocks.hpp"
#include "sympindex/index_iteration.hpp"
#include "sympindex/index_jump.hpp"
#include "sympindex/matrix.hpp"
#include "sympindex/reeb_count.hpp"

namespace sympindex {

/* Serialized record shapes:
 *
 *   decomposition  {"d": int, "blocks": [{"kind": "E_minus"|..|"Rot"|"N2Star"|
 *                   "N2Zero"|"Hyp", "angle": {"rat": [p, q]} |
 *                   {"irr": {"approx": dec, "gap": dec}}, "k": int}]}
 *   matrix         {"d": int, "entries": [["p/q", ...], ...]}  row-major
 *   profile        {"decomposition": {...}, "base_index": int}
 *   tuple          {"N": int, "m": [int], "chi": [0|1], "delta_i": [int],
 *                   "epsilon": "p/q"}
 *   configuration  {"n": int, "orbits": [{"label": str, "action": dec,
 *                   "profile": {...}, "local_homology": "nondegenerate" |
 *                   {"<iterate>": {"<degree>": int}}}]}
 *
 * Decimals travel as strings and stay exact. Writers emit two-space-indented
 * documents with keys in the order shown, so identical values produce
 * identical bytes. Readers throw InputError on anything malformed. "Hyp" and
 * "Hyp2k" are both accepted for the hyperbolic kind; "Hyp" is written. */

std::string decomposition_to_json(const NormalFormDecomposition& dec);
NormalFormDecomposition decomposition_from_json(const std::string& text);

std::string matrix_to_json(const SymplecticMatrix& m);
SymplecticMatrix matrix_from_json(const std::string& text);

std::string profile_to_json(const IndexProfile& p);
IndexProfile profile_from_json(const std::string& text);

/* An array of profile records. Reading also accepts a single record, a
 * configuration document (its orbits' profiles, in order), or an array of
 * orbit records. */
std::string profiles_to_json(const std::vector<IndexProfile>& ps);
std::vector<IndexProfile> profiles_from_json(const std::string& text);

std::string tuple_to_json(const JumpTuple& t);
std::string tuples_to_json(const std::vector<JumpTuple>& ts);
/* Accepts one record or an array. The serialized form does not carry
 * M_common / M0; rebind with bind_tuple_to_profiles before verifying. */
std::vector<JumpTuple> tuples_from_json(const std::string& text);

/* Recompute the common multiple (and clear any m0 constraint) so a parsed
 * tuple matches what a scan over these profiles would have recorded. */
void bind_tuple_to_profiles(JumpTuple& t,
                            const std::vector<IndexProfile>& profiles);

std::string config_to_json(const Configuration& c);
Configuration config_from_json(const std::string& text);

/* One-way report documents for machine-readable command output. */
std::string iterate_record_to_json(const IndexProfile& p, const Int& m);
std::string mean_record_to_json(const IndexProfile& p);
std::string identity_report_to_json(const IdentityReport& r);
std::string verdict_to_json(const Verdict& v);
std::string ellipticity_report_to_json(const EllipticityReport& r);
std::string morse_report_to_json(const MorseReport& r);
std::string mean_identity_to_json(const MeanIdentityReport& r);
std::string betti_table_to_json(int n, const Int& k_top);
std::string convexity_to_json(const ConvexityVerdict& v);

}  // namespace sympindex
