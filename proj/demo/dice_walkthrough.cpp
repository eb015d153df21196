// Support values, a critical sample and the degree-24 fit for the dice.
#include <discokit.hpp>

#include <iostream>

namespace dk = discokit;

int main() {
    const dk::Discotope dice = dk::examples::dice();
    const auto t = dk::type_vector(dice);
    std::cout << "type (" << t.counts[0] << "," << t.counts[1] << "," << t.counts[2] << ")\n";

    const auto u = dk::Direction::normalized(Eigen::Vector3d(1, 1, 1));
    std::cout << "h(u) = " << dk::support_discotope(dice, u) << '\n';
    std::cout << "exposed point = " << dk::gradient_support(dice, u).transpose() << '\n';

    const auto face = dk::face_of_direction(dice, dk::Direction(Eigen::Vector3d(0, 0, 1)));
    std::cout << "u = e3 exposes a face of dimension " << face.face_dim << '\n';

    const auto cloud = dk::sample_S<dk::Complex>(dice, 2000, 7);
    const auto search = dk::find_degree(cloud, 24, dk::Parity::even_each);
    if (!search.degree) {
        std::cout << "no equation found\n";
        return 1;
    }
    const auto& p = *search.polynomial;
    std::cout << "degree " << *search.degree << ", " << dk::count_terms(p) << " terms, residual " << p.fit_residual
              << '\n';
    const auto exact = dk::examples::dice_equation().to_double();
    std::cout << "distance to the exact table " << dk::coefficient_distance(p, exact) << '\n';
}
