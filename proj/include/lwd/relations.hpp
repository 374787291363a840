#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lwd/neighbors.hpp"
#include "lwd/tally.hpp"

namespace lwd {

/// Outcome of one verified identity. All identities are integral, so a check
/// fails on any exact per-weight mismatch; there is no tolerance.
struct RelationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RelationReport {
    std::vector<RelationCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

/// L(C_ex) from L(C) and N(C):
/// L_{2i}(C_ex) = L_{2i-1}(C) + L_{2i}(C) + N_{2i}(C), odd weights zero.
WeightTally extend_lwd(const WeightTally& l_c, const WeightTally& n_c);

/// L(C_even) from L(C) and N(C): L_{2i}(C_even) = L_{2i}(C) + N_{2i}(C).
WeightTally even_subcode_lwd(const WeightTally& l_c, const WeightTally& n_c);

/// Splits the LWD of a transitive invariant extended code of length n+1 into
/// (parity bit one, parity bit zero) tallies: w/(n+1) resp. (n+1-w)/(n+1) of
/// L_w. Throws IdentityError when a division is not exact, which doubles as a
/// sanity check on the transitivity assertion.
std::pair<WeightTally, WeightTally> parity_split(const WeightTally& l_ex);

/// L(C) of the punctured code from L(C_ex) and N(C), for transitive invariant
/// C_ex of length n+1:
///   L_w(C) = (w+1)/(n+1) * L_{w+1}(C_ex)            for odd w,
///   L_w(C) = (n+1-w)/(n+1) * L_w(C_ex) - N_w(C)     for even w.
/// Exact integer arithmetic; non-integral division or a negative count throws
/// IdentityError.
WeightTally puncture_lwd_transitive(const WeightTally& l_ex, const WeightTally& n_c);

/// True iff every weight with a nonzero count is a multiple of four; this
/// licenses N(C) = 0 for the punctured code.
bool weights_multiple_of_four(const WeightTally& a_ex);

/// Consistency of a punctured transitive-invariant LWD with N = 0: every
/// (odd w, w+1) pair with both counts nonzero must satisfy
/// L_{w+1} * (w+1) = L_w * (n+1-(w+1)). Failures become report entries.
RelationReport table_ratio_check(const WeightTally& l, std::size_t n);

/// Brute-forces L(C), N(C), and the spectra of extend(C) and even_subcode(C),
/// then checks the extension and even-subcode identities, the
/// multiples-of-four criterion, the Lemma-2 clauses, and the per-codeword
/// neighborship transfer statements.
RelationReport verify_all_relations(const LinearCode& c, const SweepOptions& opts = {});

}  // namespace lwd
