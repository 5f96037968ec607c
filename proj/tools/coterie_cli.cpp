// Command-line front end: inequalities, rays, membership, faces, polytopes
// and arrangements for simple root systems.
#include "coterie/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitResource = 4;

coterie::RootSystem system_for(const std::string& type) { return coterie::RootSystem::build(coterie::SimpleType::parse(type)); }

}  // namespace

int main(int argc, char** argv) {
    using namespace coterie;

    CLI::App app{"Inequalities and face structure of the coterie cone of a simple root system"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "plain";
    app.add_option("--format", format, "plain, json or latex")->check(CLI::IsMember({"plain", "json", "latex"}));

    std::string type;
    auto* ineq = app.add_subcommand("inequalities", "Defining inequalities of the coterie");
    ineq->add_option("type", type, "Root system type, e.g. E8")->required();
    bool full = false;
    bool symbolic = false;
    auto* reduced_flag = ineq->add_flag("--reduced", "Only Dynkin-edge inequalities (default)");
    ineq->add_flag("--full", full, "All ordered pairs of simple roots")->excludes(reduced_flag);
    ineq->add_flag("--symbolic", symbolic, "Append the rank-n pattern for classical types");

    auto* rays = app.add_subcommand("rays", "Extremal rays of the closed coterie");
    rays->add_option("type", type)->required();

    std::string vec;
    std::string mode = "open";
    std::string method = "all";
    auto* mem = app.add_subcommand("member", "Membership of a point given in root coordinates");
    mem->add_option("type", type)->required();
    mem->add_option("x", vec, "Comma-separated coordinates, e.g. 1,3/2,2")->required();
    mem->add_option("--mode", mode)->check(CLI::IsMember({"open", "closed"}));
    mem->add_option("--method", method)->check(CLI::IsMember({"all", "geometric", "full", "edges"}));

    CubeCheckOptions cube;
    auto* faces = app.add_subcommand("faces", "Face poset and its identification with the cube");
    faces->add_option("type", type)->required();
    faces->add_option("--max-rank", cube.max_rank, "Refuse larger ranks");
    faces->add_option("--implication-rank", cube.implication_rank, "Rank bound for exact containment checks");

    std::size_t orbit_cap = kDefaultOrbitCap;
    auto* poly = app.add_subcommand("polytope", "Dominant weights below y");
    poly->add_option("type", type)->required();
    poly->add_option("y", vec, "Comma-separated root coordinates")->required();
    poly->add_option("--orbit-cap", orbit_cap);

    std::string file;
    auto* arr = app.add_subcommand("arrangement", "Weyl arrangement, classifying map and orbit size");
    arr->add_option("type", type, "Use the canonical arrangement of this type");
    arr->add_option("--file", file, "Arrangement file")->check(CLI::ExistingFile);
    arr->add_option("--orbit-cap", orbit_cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        Report rep;
        if (*ineq) {
            rep = inequalities_report(system_for(type), !full, symbolic);
        } else if (*rays) {
            rep = rays_report(system_for(type));
        } else if (*mem) {
            std::vector<Method> methods;
            if (method == "all" || method == "geometric") methods.push_back(Method::Geometric);
            if (method == "all" || method == "full") methods.push_back(Method::Full);
            if (method == "all" || method == "edges") methods.push_back(Method::Edges);
            rep = member_report(system_for(type), parse_vector(vec), mode == "open" ? Mode::Open : Mode::Closed, methods);
        } else if (*faces) {
            rep = faces_report(system_for(type), cube);
        } else if (*poly) {
            rep = polytope_report(system_for(type), parse_vector(vec), orbit_cap);
        } else if (*arr) {
            if (file.empty() == type.empty()) {
                std::cerr << "arrangement: give exactly one of TYPE or --file\n";
                return kExitUsage;
            }
            Arrangement a = [&] {
                if (!type.empty()) return canonical_arrangement(system_for(type));
                std::ifstream in(file);
                return parse_arrangement(in);
            }();
            rep = arrangement_report(a, orbit_cap);
        }
        std::cout << rep.render(parse_format(format));
        return rep.exit_code;
    } catch (const ResourceLimitExceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
}
