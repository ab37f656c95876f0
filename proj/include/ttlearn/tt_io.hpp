#pragma once

#include <iosfwd>
#include <string>

#include "ttlearn/tt.hpp"

namespace ttlearn {

// Structured-text (JSON) train serialization. Document fields:
// {version, n_sites, bond_ranks, cores}; cores are nested arrays with one
// [re, im] pair per entry, emitted with 17 significant digits.

void save_mps(const Mps& s, std::ostream& os);
void save_mps(const Mps& s, const std::string& path);
Mps load_mps(std::istream& is);
Mps load_mps(const std::string& path);

void save_mpo(const Mpo& o, std::ostream& os);
void save_mpo(const Mpo& o, const std::string& path);
Mpo load_mpo(std::istream& is);
Mpo load_mpo(const std::string& path);

}  // namespace ttlearn
