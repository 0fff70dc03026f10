#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "lpcalc/factorization.hpp"
#include "lpcalc/invariants.hpp"
#include "lpcalc/twist_system.hpp"

namespace lpcalc {

using json = nlohmann::ordered_json;

// A loaded dataset: the twist system plus its factorization. Boundary
// curves delta1..deltap are always registered.
struct Dataset {
    std::string id;
    std::unique_ptr<TwistSystem> sys;
    Factorization fact;
};

json dataset_to_json(const Dataset& d);
Dataset dataset_from_json(const json& j);

Dataset load_dataset_file(const std::string& path);
void save_dataset_file(const Dataset& d, const std::string& path);

// Move scripts: array of {"op":"elem"|"elem_inv","i":int} |
// {"op":"conj","by":[curve-name tokens, "~" = inverse]} |
// {"op":"subst","at":[start,len],"relation":id,"direction":"lr"|"rl"}
json script_to_json(const TwistSystem& sys, const MoveScript& s);
MoveScript script_from_json(const TwistSystem& sys, const json& j);
MoveScript load_script_file(const TwistSystem& sys, const std::string& path);

json report_to_json(const HomologyReport& r);

}  // namespace lpcalc
