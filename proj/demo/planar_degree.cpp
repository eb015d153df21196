// Degree of the boundary curve of random planar ellipse sums.
#include <discokit.hpp>

#include <iostream>

namespace dk = discokit;

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 2;
    const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 1;
    const int max_degree = static_cast<int>(n * (1u << n));
    const auto dt = dk::random_planar_ellipses(n, seed);
    const auto count = dk::default_sample_count(2, max_degree, dk::Parity::even_total) / (1u << (n - 1)) + 1;
    const auto cloud = dk::sample_S<dk::Complex>(dt, count, seed);
    const auto s = dk::find_degree(cloud, max_degree, dk::Parity::even_total);
    for (const auto& [deg, r] : s.trace) {
        std::cout << "degree " << deg << ": ";
        if (std::holds_alternative<dk::NoEquation>(r)) std::cout << "no equation\n";
        else if (std::holds_alternative<dk::AmbiguousNullspace>(r)) std::cout << "ambiguous\n";
        else std::cout << "equation with " << dk::count_terms(std::get<dk::ImplicitPolynomial>(r)) << " terms\n";
    }
    return s.degree ? 0 : 1;
}
