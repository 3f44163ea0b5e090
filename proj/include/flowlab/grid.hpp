#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "flowlab/jet.hpp"

namespace flowlab {

enum class QuadratureRule { trapezoid, simpson, gauss_legendre };

const char* quadrature_name(QuadratureRule r);
QuadratureRule quadrature_from_name(const std::string& name);

// Tensor grid on [-extent, extent]^d with a quadrature rule per axis.
struct GridSpec {
    int d = 1;
    double extent = 8.0;
    int points_per_axis = 64;
    QuadratureRule rule = QuadratureRule::gauss_legendre;

    bool operator==(const GridSpec&) const = default;
    std::string to_string() const;
};

class Grid {
public:
    explicit Grid(const GridSpec& spec);
    static std::shared_ptr<const Grid> make(const GridSpec& spec);

    const GridSpec& spec() const { return spec_; }
    int dim() const { return spec_.d; }
    std::size_t size() const { return size_; }

    const std::vector<double>& axis_nodes() const { return nodes_; }
    const std::vector<double>& axis_weights() const { return weights_; }
    // tensor weights per flat node, cached
    const std::vector<double>& node_weights() const { return node_weights_; }
    // euclidean |x| per flat node, cached
    const std::vector<double>& node_radii() const { return node_radii_; }

    Vec node(std::size_t flat) const;
    void axis_indices(std::size_t flat, std::vector<int>& out) const;
    bool on_boundary_layer(std::size_t flat) const;  // touches the outermost axis node

private:
    GridSpec spec_;
    std::size_t size_;
    std::vector<double> nodes_, weights_;
    std::vector<double> node_weights_, node_radii_;
};

// nodes/weights of the rule on [a, b]
void quadrature_nodes(QuadratureRule rule, int n, double a, double b,
                      std::vector<double>& nodes, std::vector<double>& weights);
// Gauss-Legendre on [a, b]
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

} // namespace flowlab
