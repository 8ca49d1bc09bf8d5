#pragma once

#include <map>
#include <string>
#include <vector>

#include "topo/montesinos.hpp"
#include "topo/tangle.hpp"

namespace topo::verify {

struct Evidence {
    std::string desc;
    std::string value;
};

struct ClaimReport {
    std::string claim;
    std::map<std::string, std::string> params;
    std::string status;  // "pass", "fail", or "assumed"
    std::vector<Evidence> evidence;

    bool failed() const { return status == "fail"; }
};

/// One twist family: a framed surgery site plus the two fixed tangle
/// slots around it, and the expected fiber-index formula
/// {fixed1, fixed2, |slope*n + offset|}.
struct FamilySpec {
    std::string id;
    FramedSite site;
    ExtendedSlope slot_before;  // fixed tangle before the surgered slot
    ExtendedSlope slot_after;   // fixed tangle after it
    long long fixed_index_1;
    long long fixed_index_2;
    long long linear_slope;     // a in |a*n + b|
    long long linear_offset;    // b

    /// |a*n + b|; always >= 2 for the built-in families
    /// (a*n + b = -1, 0, 1 has no integer solution).
    long long third_index(long long n) const;

    /// The Montesinos triple produced by -1/n untangle surgery at the site.
    MontesinosLink triple(long long n) const;
};

const FamilySpec& family_by_id(const std::string& id);
std::vector<std::string> family_ids();

std::vector<std::string> claim_ids();

/// Runs one registered claim. Throws on an unknown id or malformed params.
ClaimReport run_claim(const std::string& id,
                      const std::map<std::string, std::string>& params);

/// Per-n replay of the family's full computation chain (tangle surgery,
/// double cover type, determinant, surgery homology, torus exclusion),
/// plus one trailing report listing the assumed, not machine-checked
/// properties.
std::vector<ClaimReport> sweep_family(const FamilySpec& spec, long long n_min,
                                      long long n_max);

/// Exhaustive unimodular-map search reproducing the second family's site
/// from its type and determinant constraints alone.
FramedSite derive_site_t2();

std::string to_json(const std::vector<ClaimReport>& reports);
std::string to_json(const ClaimReport& report);
std::string to_text(const std::vector<ClaimReport>& reports);

}  // namespace topo::verify
