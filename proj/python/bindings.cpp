#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coterie/report.hpp"

#include <fstream>

namespace py = pybind11;
using namespace coterie;

namespace {

RootSystem system_for(const std::string& type) { return RootSystem::build(SimpleType::parse(type)); }

Vector to_vector(const std::vector<std::string>& entries) {
    Vector out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(parse_rational(e));
    return out;
}

Mode parse_mode(const std::string& mode) {
    if (mode == "open") return Mode::Open;
    if (mode == "closed") return Mode::Closed;
    throw ParseError("unknown mode '" + mode + "'");
}

Method parse_method(const std::string& method) {
    if (method == "geometric") return Method::Geometric;
    if (method == "full") return Method::Full;
    if (method == "edges") return Method::Edges;
    throw ParseError("unknown method '" + method + "'");
}

std::string render(const Report& r, const std::string& format) { return r.render(parse_format(format)); }

}  // namespace

PYBIND11_MODULE(_coterie, m) {
    m.doc() = "Exact computations for the coterie cone of a simple root system";
    py::register_exception<ResourceLimitExceeded>(m, "ResourceLimitExceeded", PyExc_RuntimeError);

    m.def("supported_types", [](int max_rank) {
        std::vector<std::string> out;
        for (const auto& t : supported_types(max_rank)) out.push_back(t.name());
        return out;
    }, py::arg("max_rank") = 8);

    m.def("inequalities", [](const std::string& type, bool reduced, bool symbolic, const std::string& format) {
        return render(inequalities_report(system_for(type), reduced, symbolic), format);
    }, py::arg("type"), py::arg("reduced") = true, py::arg("symbolic") = false, py::arg("format") = "json");

    m.def("rays", [](const std::string& type, const std::string& format) {
        return render(rays_report(system_for(type)), format);
    }, py::arg("type"), py::arg("format") = "json");

    m.def("member", [](const std::string& type, const std::vector<std::string>& x, const std::string& mode,
                       const std::string& method) {
        return member(system_for(type), to_vector(x), parse_mode(mode), parse_method(method));
    }, py::arg("type"), py::arg("x"), py::arg("mode") = "open", py::arg("method") = "geometric");

    m.def("faces", [](const std::string& type, int max_rank, const std::string& format) {
        CubeCheckOptions options;
        options.max_rank = max_rank;
        return render(faces_report(system_for(type), options), format);
    }, py::arg("type"), py::arg("max_rank") = CubeCheckOptions{}.max_rank, py::arg("format") = "json");

    m.def("polytope", [](const std::string& type, const std::vector<std::string>& y, std::size_t orbit_cap,
                         const std::string& format) {
        return render(polytope_report(system_for(type), to_vector(y), orbit_cap), format);
    }, py::arg("type"), py::arg("y"), py::arg("orbit_cap") = kDefaultOrbitCap, py::arg("format") = "json");

    m.def("arrangement", [](const std::string& type, std::size_t orbit_cap, const std::string& format) {
        return render(arrangement_report(canonical_arrangement(system_for(type)), orbit_cap), format);
    }, py::arg("type"), py::arg("orbit_cap") = kDefaultOrbitCap, py::arg("format") = "json");

    m.def("arrangement_file", [](const std::string& path, std::size_t orbit_cap, const std::string& format) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        return render(arrangement_report(parse_arrangement(in), orbit_cap), format);
    }, py::arg("path"), py::arg("orbit_cap") = kDefaultOrbitCap, py::arg("format") = "json");
}
