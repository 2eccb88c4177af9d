#pragma once

#include <iosfwd>
#include <string>

#include "splitcyc/rotation_map.hpp"

namespace splitcyc {

// rotmap 1
// vertices <V>
// <v>: n1 n2 ... nk

RotationMap read_rotmap(std::istream& in);
RotationMap read_rotmap_file(const std::string& path);
void write_rotmap(std::ostream& out, const RotationMap& map);
void write_rotmap_file(const std::string& path, const RotationMap& map);

}  // namespace splitcyc
