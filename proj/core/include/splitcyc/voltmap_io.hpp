#pragma once

#include <iosfwd>
#include <string>

#include "splitcyc/voltage.hpp"

namespace splitcyc {

// voltmap 1
// n <modulus>
// rotation: a1 a2 ... a_{n-1}

VoltageBaseMap read_voltmap(std::istream& in);
VoltageBaseMap read_voltmap_file(const std::string& path);
void write_voltmap(std::ostream& out, const VoltageBaseMap& base);

}  // namespace splitcyc
