#include "lpcalc/pencil_library.hpp"

// Curve-word tables for the shipped pencils. Placeholder bodies until the
// word data is frozen.

namespace lpcalc {

Dataset matsumoto_lift() { throw model_error("dataset not available: matsumoto-lift"); }
Dataset modified_matsumoto() { throw model_error("dataset not available: matsumoto-sym"); }
Dataset smith_f3() { throw model_error("dataset not available: smith-f3"); }
Dataset smith_geometric() { throw model_error("dataset not available: smith-geometric"); }
MoveScript geometric_to_combinatorial_script(TwistSystem&) {
    throw model_error("script not available");
}
Dataset generalized_fg(int g) {
    if (g < 3) throw model_error("fg family needs genus >= 3");
    throw model_error("dataset not available: fg-" + std::to_string(g));
}
bool verify_cover_structure(int) { throw model_error("cover structure check not available"); }
bool lemma_actions_check() { throw model_error("actions check not available"); }
Dataset f_alpha_beta(const std::vector<int>&, const std::vector<int>&) {
    throw model_error("dataset not available: fab");
}

void fg4_boundary_fixtures(const Dataset&, const ChainComplex&) {
    throw model_error("boundary fixtures not available");
}
void run_script_checks() { throw model_error("scripts not available"); }

}  // namespace lpcalc
