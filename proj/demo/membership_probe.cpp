// Classifies scaled boundary points of the dice.
#include <discokit.hpp>

#include <iostream>

namespace dk = discokit;

int main() {
    const auto dice = dk::examples::dice();
    const auto u = dk::Direction::normalized(Eigen::Vector3d(0.3, -0.5, 0.8));
    const Eigen::VectorXd b = dk::gradient_support(dice, u);
    for (double s : {0.9, 1.0, 1.1}) {
        const auto r = dk::project(dice, s * b);
        std::cout << s << " x boundary: " << (r.inside() ? "inside" : "outside") << ", distance "
                  << r.distance_estimate << ", " << r.iterations << " iterations\n";
    }
}
