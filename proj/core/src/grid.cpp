#include "wedge/grid.hpp"

#include <fstream>

#include <json.hpp>

namespace wedge {

WedgeField read_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open field file: " + path);
    nlohmann::json j;
    in >> j;
    Grid g;
    g.theta0 = j.at("theta0").get<double>();
    g.L = j.at("L").get<double>();
    g.nx = j.at("nx").get<int>();
    g.nth = j.at("ntheta").get<int>();
    WedgeField f(g, j.at("components").get<int>());
    const auto& vals = j.at("values");
    if (vals.size() != f.values.size()) {
        throw domain_error("field file has wrong value count: " + path);
    }
    for (std::size_t k = 0; k < f.values.size(); ++k) f.values[k] = vals[k].get<double>();
    return f;
}

void write_field(const WedgeField& f, const std::string& path) {
    nlohmann::json j;
    j["theta0"] = f.grid.theta0;
    j["L"] = f.grid.L;
    j["nx"] = f.grid.nx;
    j["ntheta"] = f.grid.nth;
    j["components"] = f.components;
    j["values"] = f.values;
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write field file: " + path);
    out << j.dump() << "\n";
}

}  // namespace wedge
