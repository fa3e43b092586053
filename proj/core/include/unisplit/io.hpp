#pragma once

#include "unisplit/instance.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace unisplit {
namespace io {

// Instance files are JSON objects: {"speeds":[2,1,1],"jobs":[22,7,4,3]}.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& instance);
void write_instance_file(const std::string& path, const Instance& instance);

// A bare JSON array of positive integers (gadget source lists).
std::vector<Int> read_int_list_file(const std::string& path);

}  // namespace io
}  // namespace unisplit
