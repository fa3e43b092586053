#include "unisplit/io.hpp"

#include "unisplit/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace unisplit {
namespace io {

namespace {

using nlohmann::json;

Int to_int(const json& v) {
    if (v.is_number_unsigned()) {
        return Int(v.get<std::uint64_t>());
    }
    if (v.is_number_integer()) {
        return Int(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        return Int(v.get<std::string>());  // large values may arrive as strings
    }
    throw input_error("expected an integer");
}

std::vector<Int> to_int_list(const json& v) {
    if (!v.is_array()) {
        throw input_error("expected an array of integers");
    }
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& item : v) {
        out.push_back(to_int(item));
    }
    return out;
}

json parse(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

Instance read_instance(std::istream& in) {
    json doc = parse(in);
    if (!doc.is_object() || !doc.contains("speeds") || !doc.contains("jobs")) {
        throw input_error("instance file needs \"speeds\" and \"jobs\" arrays");
    }
    return load_instance(to_int_list(doc["jobs"]), to_int_list(doc["speeds"]));
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open instance file: " + path);
    }
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    json doc;
    doc["speeds"] = json::array();
    for (const Int& r : inst.speeds) {
        doc["speeds"].push_back(r.convert_to<std::uint64_t>());
    }
    doc["jobs"] = json::array();
    for (const Int& x : inst.jobs) {
        if (x > Int(std::numeric_limits<std::uint64_t>::max())) {
            doc["jobs"].push_back(x.str());
        } else {
            doc["jobs"].push_back(x.convert_to<std::uint64_t>());
        }
    }
    out << doc.dump() << "\n";
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) {
        throw input_error("cannot open output file: " + path);
    }
    write_instance(out, inst);
}

std::vector<Int> read_int_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open list file: " + path);
    }
    return to_int_list(parse(in));
}

}  // namespace io
}  // namespace unisplit
