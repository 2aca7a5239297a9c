#pragma once

#include <string>

#include "qgr/quiver.hpp"

namespace qgr {

std::string simples_json(const Quiver& q);   // throws NotFiniteGK
std::string cycles_json(const Quiver& q);    // cycles or the doubly cyclic witness
std::string growth_verify_json(const Quiver& q);

// Everything at once: growth, simples, Ext-quiver, K0, Bratteli data,
// endomorphism blocks, Noetherian flags, GK-1 summary, canonical form.
// Sections needing finite GK are null when it is infinite.
std::string report_json(const Quiver& q, int cap_degree, int cap_iterations);

}  // namespace qgr
