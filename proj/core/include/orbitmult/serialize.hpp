#pragma once

#include <span>
#include <string>
#include <vector>

#include "orbitmult/branching.hpp"
#include "orbitmult/cg_solver.hpp"
#include "orbitmult/orbit_space.hpp"

namespace orbitmult {

// Weights travel as comma-separated integers, e.g. "3,1,-2".
DominantWeight parse_weight(const std::string& text); // throws ParseError / NotDominantError
std::string format_weight(const DominantWeight& w);

// {"n":0|1,"path":"...","c":["1/2",...],"witness":[{"radicand":"1/2","index":0},...],
//  "diagnostics":"..."}; c and witness only when n = 1. Rationals are "p/q"
// strings, never floats.
std::string to_json(const CGResult& result);

// {"S":[[re,im],...row major...],"u":[[re,im],...],"x":real}
std::string to_json(const LinearForm& phi);
LinearForm linear_form_from_json(const std::string& text); // throws ParseError

std::string to_json(const BranchingTable& table);
// Columns: k,nu,dim (nu quoted, dim exact).
std::string to_csv(const BranchingTable& table);

// Columns: mu,n,m,agree[,paper_form_flag]. The flag column is emitted when
// flags is nonempty and marks rows where the literal scalar-case
// classification disagrees with the solver.
std::string to_csv(std::span<const CompareRow> rows, const std::vector<bool>& flags = {});

const char* to_string(Convention c);
const char* to_string(AlphaSign s);

} // namespace orbitmult
