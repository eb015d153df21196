// Writes the bundled examples as spec/equation JSON files plus a manifest.
#include <discokit.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace dk = discokit;
using dk::io::json;

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    json manifest = json::array();
    for (const auto& fx : dk::fixtures()) {
        const auto spec_file = fx.name + ".spec.json";
        const auto eq_file = fx.name + ".equations.json";
        std::ofstream(dir / spec_file) << dk::io::discotope_to_json(fx.discotope).dump(2) << '\n';

        json eqs = json::array();
        for (const auto& e : fx.known_equations) {
            json j = dk::io::polynomial_to_json(e.to_double());
            j.erase("residual");
            j.erase("parity");
            eqs.push_back(std::move(j));
        }
        std::ofstream(dir / eq_file) << eqs.dump(1) << '\n';

        json entry = {{"name", fx.name},
                      {"spec", spec_file},
                      {"equations", eq_file},
                      {"sampler", fx.sampler == dk::SamplerKind::join ? "join" : "critical"},
                      {"parity", dk::to_string(fx.parity)}};
        entry["expected_degree"] = fx.expected_degree ? json(*fx.expected_degree) : json(nullptr);
        entry["expected_terms"] = fx.expected_terms ? json(*fx.expected_terms) : json(nullptr);
        if (!fx.note.empty()) entry["note"] = fx.note;
        manifest.push_back(std::move(entry));
        std::cout << "wrote " << fx.name << '\n';
    }
    std::ofstream(dir / "segment-120.spec.json") << dk::io::discotope_to_json(dk::examples::segment_120()).dump(2) << '\n';
    std::ofstream(dir / "manifest.json") << manifest.dump(2) << '\n';
}
