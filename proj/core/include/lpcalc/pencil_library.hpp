#pragma once

#include <string>
#include <vector>

#include "lpcalc/invariants.hpp"
#include "lpcalc/json_io.hpp"

namespace lpcalc {

// --- genus-2 pencil with four base points (8 twists) ------------------------

Dataset matsumoto_lift();

// The symmetric form of the same pencil, reached from matsumoto_lift() by a
// substitution/conjugation script (see modified_matsumoto_script).
Dataset modified_matsumoto();

// --- genus-3 pencils with four base points (12 twists) ----------------------

Dataset smith_f3();
Dataset smith_geometric();

// Script mapping smith_geometric onto smith_f3 curve-wise, together with the
// curve identification table it certifies.
MoveScript geometric_to_combinatorial_script(TwistSystem& sys);

// --- the symmetric genus-g family on Sigma_g^{2g-2}, g >= 3 -----------------

Dataset generalized_fg(int g);

// For odd g >= 3: replays the block-reordering script and checks that the
// six resulting subfactorizations are each invariant (as curve sets) under
// the square of the rotation, which exhibits the ((g-1)/2)-fold cover.
bool verify_cover_structure(int g);

bool lemma_actions_check();

// Checks the published boundary-operator values on the genus-4 member,
// after the documented basis change; throws on the first mismatch.
void fg4_boundary_fixtures(const Dataset& d, const ChainComplex& cc);

// Replays every shipped derivation script and checks its endpoint; throws
// on the first failure.
void run_script_checks();

// --- fiber-sum twists of smith_f3 by a commuting pair -----------------------

// Words in the two one-holed-torus twists. Tokens "tc" / "td", suffix "~"
// for the inverse, whitespace separated; letters +-1 = t_c, +-2 = t_d.
std::vector<int> parse_tc_td(const std::string& text);
std::string render_tc_td(const std::vector<int>& w);

// Stable content hash used in dataset ids ("fab-<hash>").
std::string fab_hash(const std::vector<int>& alpha, const std::vector<int>& beta);

Dataset f_alpha_beta(const std::vector<int>& alpha, const std::vector<int>& beta);

// Fundamental group of the torus bundle over the torus with monodromies
// (alpha, beta): generators a, b (fiber) and c, d (base), relators
// [a,b], [c,d], and the four mapping-torus relators computed by letting
// alpha and beta act on the fiber group. Throws if alpha and beta do not
// commute as mapping classes.
Presentation torus_bundle_pi1(const std::vector<int>& alpha, const std::vector<int>& beta);

// --- registry ---------------------------------------------------------------

std::vector<std::string> builtin_ids();
Dataset build_builtin(const std::string& id);

}  // namespace lpcalc
