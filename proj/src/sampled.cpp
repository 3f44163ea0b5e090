#include "flowlab/sampled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flowlab {

SampledFunction::SampledFunction(std::shared_ptr<const Grid> grid, int dim_out, int order,
                                 std::vector<JetPoly> jets, std::optional<VectorForm> closed_form)
    : grid_(std::move(grid)), dim_out_(dim_out), order_(order), jets_(std::move(jets)),
      closed_form_(std::move(closed_form)) {
    if (jets_.size() != grid_->size())
        throw std::invalid_argument("sampled function: jet count != node count");
    for (const JetPoly& j : jets_) {
        if (j.dim_in() != grid_->dim() || j.dim_out() != dim_out_ || j.order() != order_)
            throw std::invalid_argument("sampled function: inconsistent jet shape");
        for (double c : j.raw())
            if (!std::isfinite(c))
                throw std::invalid_argument("sampled function: nonfinite jet coefficient");
    }
}

SampledFunction SampledFunction::sample(const VectorForm& form, const GridSpec& spec, int order) {
    auto grid = Grid::make(spec);
    std::vector<JetPoly> jets;
    jets.reserve(grid->size());
    for (std::size_t f = 0; f < grid->size(); ++f)
        jets.push_back(form.jet(grid->node(f), order));
    return SampledFunction(grid, form.dim_out(), order, std::move(jets), form);
}

SampledFunction SampledFunction::zero(const GridSpec& spec, int dim_out, int order) {
    return sample(VectorForm(std::vector<ScalarForm>(dim_out, form_zero(spec.d))), spec, order);
}

namespace {

// indices of the 4 axis nodes bracketing x (fewer near the edges)
void stencil_indices(const std::vector<double>& nodes, double x, int out[4], int& count) {
    const int n = static_cast<int>(nodes.size());
    int hi = static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
    int lo = std::clamp(hi - 2, 0, std::max(0, n - 4));
    count = std::min(4, n - lo);
    for (int i = 0; i < count; ++i) out[i] = lo + i;
}

double lagrange_weight(const std::vector<double>& nodes, const int* idx, int count, int which,
                       double x) {
    double w = 1.0;
    for (int j = 0; j < count; ++j) {
        if (j == which) continue;
        w *= (x - nodes[idx[j]]) / (nodes[idx[which]] - nodes[idx[j]]);
    }
    return w;
}

} // namespace

Vec interpolate_value(const SampledFunction& f, const Vec& x) {
    JetPoly j = interpolate_jet(f, x);
    return j.value();
}

JetPoly interpolate_jet(const SampledFunction& f, const Vec& x) {
    const Grid& grid = f.grid();
    const int d = grid.dim();
    const auto& nodes = grid.axis_nodes();
    const std::size_t n = nodes.size();

    int idx[3][4];
    int cnt[3];
    double w[3][4];
    for (int i = 0; i < d; ++i) {
        stencil_indices(nodes, x[i], idx[i], cnt[i]);
        for (int s = 0; s < cnt[i]; ++s) w[i][s] = lagrange_weight(nodes, idx[i], cnt[i], s, x[i]);
    }

    JetPoly out(d, f.dim_out(), f.order(), x);
    std::vector<double> acc(out.raw().size(), 0.0);
    // tensor product of the axis stencils
    int counters[3] = {0, 0, 0};
    while (true) {
        double weight = 1.0;
        std::size_t flat = 0;
        for (int i = 0; i < d; ++i) {
            weight *= w[i][counters[i]];
            flat = flat * n + idx[i][counters[i]];
        }
        const JetPoly& jn = f.jet(flat);
        for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += weight * jn.raw()[c];
        int axis = d - 1;
        while (axis >= 0) {
            if (++counters[axis] < cnt[axis]) break;
            counters[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    out.raw() = acc;
    return out;
}

} // namespace flowlab
