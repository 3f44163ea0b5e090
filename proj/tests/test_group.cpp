#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "flowlab/flow.hpp"
#include "flowlab/trouve.hpp"

using namespace flowlab;

namespace {

GridSpec grid1d(int n = 65, double extent = 4.0) {
    return GridSpec{1, extent, n, QuadratureRule::trapezoid};
}

DiffeoRep gauss_diffeo(double amp, int order = 5) {
    return DiffeoRep::from_map(identity_plus(VectorForm({form_gaussian(1, amp, {0.0}, 1.0)})),
                               grid1d(), order);
}

DiffeoRep shift_diffeo(double c, int order = 5) {
    return DiffeoRep::from_map(identity_plus(VectorForm({form_constant(1, c)})), grid1d(), order);
}

double sup_distance_to(const DiffeoRep& a, const DiffeoRep& b) {
    double sup = 0.0;
    const auto& grid = a.displacement().grid();
    for (std::size_t n = 0; n < grid.size(); ++n) {
        Vec va = a.eval(grid.node(n));
        Vec vb = b.eval(grid.node(n));
        for (int i = 0; i < a.dim(); ++i) sup = std::max(sup, std::abs(va[i] - vb[i]));
    }
    return sup;
}

FlowOptions flow_opts() {
    FlowOptions o;
    o.grid = GridSpec{1, 4.0, 17, QuadratureRule::trapezoid};
    o.seminorm_grid = GridSpec{1, 8.0, 129, QuadratureRule::simpson};
    o.jet_order = 3;
    return o;
}

} // namespace

TEST_CASE("membership checks") {
    auto id = DiffeoRep::from_map(identity_map(1), grid1d(), 3);
    auto rid = is_member(id);
    CHECK(rid.member);
    CHECK(rid.det_min == doctest::Approx(1.0));

    // Id + 0.5 tanh(x): det = 1 + 0.5 sech^2 >= 1
    auto tanh_rep = DiffeoRep::from_map(
        identity_plus(VectorForm({form_tanh_axis(1, 0, 0.5)})), grid1d(), 3);
    auto rt = is_member(tanh_rep, 0.5);
    CHECK(rt.member);
    CHECK(rt.det_min >= 0.99);

    // Id - 2 x e^{-x^2}: derivative -2 at 0, det < 0
    auto bad = DiffeoRep::from_map(
        identity_plus(VectorForm({form_xgauss_axis(1, 0, -2.0)})), grid1d(), 3);
    auto rb = is_member(bad);
    CHECK_FALSE(rb.member);
    CHECK(rb.det_min < 0.0);
    CHECK(std::abs(rb.argmin[0]) < 0.2);  // violation near the origin
}

TEST_CASE("composition with the identity and of two shifts") {
    auto id = DiffeoRep::from_map(identity_map(1), grid1d(), 4);
    auto phi = gauss_diffeo(0.3, 4);
    CHECK(sup_distance_to(compose(phi, id), phi) <= 1e-12);
    CHECK(sup_distance_to(compose(id, phi), phi) <= 1e-12);

    auto s1 = shift_diffeo(0.2), s2 = shift_diffeo(0.35);
    auto s = compose(s1, s2);
    auto expect = shift_diffeo(0.55);
    CHECK(sup_distance_to(s, expect) <= 1e-12);
}

TEST_CASE("inversion") {
    auto id = DiffeoRep::from_map(identity_map(1), grid1d(), 4);
    CHECK(sup_distance_to(invert(id), id) <= 1e-12);

    auto s = shift_diffeo(0.4);
    CHECK(sup_distance_to(invert(s), shift_diffeo(-0.4)) <= 1e-10);

    auto phi = gauss_diffeo(0.3, 5);
    auto round = compose(invert(phi), phi);
    CHECK(sup_distance_to(round, id) <= 1e-8);
}

TEST_CASE("jet inversion closes to the identity jet") {
    auto phi = gauss_diffeo(0.3, 6);
    for (double x : {-1.2, 0.0, 0.7}) {
        JetPoly a = phi.jet({x}, 6);
        JetPoly b = jet_invert(a);
        JetPoly round = jet_compose(a, b);
        JetPoly ident = JetPoly::identity(1, 6, b.basepoint());
        for (int f = 0; f < round.n_coeffs(); ++f)
            CHECK(std::abs(round.coeff(f, 0) - ident.coeff(f, 0)) <= 1e-8);
    }
}

TEST_CASE("group laws on a member corpus") {
    std::vector<DiffeoRep> corpus;
    corpus.push_back(gauss_diffeo(0.3, 4));
    corpus.push_back(DiffeoRep::from_map(
        identity_plus(VectorForm({form_tanh_axis(1, 0, 0.4)})), grid1d(), 4));
    corpus.push_back(DiffeoRep::from_map(
        identity_plus(VectorForm({form_xgauss_axis(1, 0, 0.5)})), grid1d(), 4));
    auto id = DiffeoRep::from_map(identity_map(1), grid1d(), 4);

    for (const auto& rep : corpus) {
        CHECK(rep.det_inf() >= 0.2);
        CHECK(sup_distance_to(compose(rep, invert(rep)), id) <= 1e-8);
        CHECK(sup_distance_to(invert(invert(rep)), rep) <= 1e-8);
    }
    // associativity
    const auto& a = corpus[0];
    const auto& b = corpus[1];
    const auto& c = corpus[2];
    CHECK(sup_distance_to(compose(compose(a, b), c), compose(a, compose(b, c))) <= 1e-8);
}

TEST_CASE("interpolation-backed composition stays near the closed form") {
    // drop the map trees to force the interpolation path
    auto a_closed = gauss_diffeo(0.25, 4);
    auto b_closed = DiffeoRep::from_map(
        identity_plus(VectorForm({form_tanh_axis(1, 0, 0.3)})), grid1d(257), 4);
    auto a = DiffeoRep::from_samples(a_closed.displacement());
    auto b = DiffeoRep::from_samples(b_closed.displacement());
    auto via_samples = compose(a, b);
    auto via_maps = compose(a_closed, b_closed);
    CHECK(via_samples.displacement().from_interpolation());
    CHECK(sup_distance_to(via_samples, via_maps) <= 1e-4);
}

TEST_CASE("trouve generator of zero and constant displacements") {
    auto id = DiffeoRep::from_map(identity_map(1), grid1d(), 3);
    auto u0 = trouve_generator(id);
    CHECK(u0->eval(0.3, {0.5})[0] == doctest::Approx(0.0));

    auto s = shift_diffeo(0.4, 3);
    auto us = trouve_generator(s);
    for (double t : {0.0, 0.4, 0.9})
        CHECK(us->eval(t, {-0.7})[0] == doctest::Approx(0.4).epsilon(1e-10));
}

TEST_CASE("trouve generator round trip") {
    auto ones = WeightSequence::ones(12);
    auto target = gauss_diffeo(0.3, 4);
    auto u = trouve_generator(target);
    auto traj = glue_flow(u, 1.0, ones, flow_opts());
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.grid().size(); ++i) {
        Vec x = traj.grid().node(i);
        double got = traj.position(1.0, i)[0];
        double expect = target.eval(x)[0];
        worst = std::max(worst, std::abs(got - expect));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("trouve generator rejects too-large segments") {
    auto big = DiffeoRep::from_map(
        identity_plus(VectorForm({form_xgauss_axis(1, 0, 1.3)})), grid1d(), 4);
    CHECK(is_member(big).member);  // still a diffeo, only the segment check fails
    CHECK_THROWS_WITH_AS(trouve_generator(big),
                         doctest::Contains("use polygon_generator"), std::runtime_error);
}

TEST_CASE("polygon generator: two half shifts give the full shift") {
    auto ones = WeightSequence::ones(12);
    std::vector<DiffeoRep> vertices{
        DiffeoRep::from_map(identity_map(1), grid1d(), 3),
        shift_diffeo(0.25, 3),
        shift_diffeo(0.5, 3),
    };
    auto u = polygon_generator(vertices);
    auto traj = glue_flow(u, 1.0, ones, flow_opts());
    for (std::size_t i = 0; i < traj.grid().size(); ++i)
        CHECK(traj.displacement(1.0, i)[0] == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("polygon generator reaches a diffeo too large for one segment") {
    auto ones = WeightSequence::ones(12);
    auto map = identity_plus(VectorForm({form_xgauss_axis(1, 0, 1.3)}));
    auto target = DiffeoRep::from_map(map, grid1d(), 4);

    GeneratorOptions gopts;
    auto vertices = refine_polygon(target, gopts);
    CHECK(vertices.size() >= 3);

    auto u = polygon_generator(vertices, gopts);
    auto opts = flow_opts();
    auto traj = glue_flow(u, 1.0, ones, opts);
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.grid().size(); ++i) {
        Vec x = traj.grid().node(i);
        worst = std::max(worst, std::abs(traj.position(1.0, i)[0] - target.eval(x)[0]));
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("flow-generated diffeomorphisms pass the membership check") {
    auto ones = WeightSequence::ones(12);
    auto u = autonomous_field(VectorForm({form_sin_axis(1, 0, 0.8)}));
    auto traj = glue_flow(u, 1.0, ones, flow_opts());
    auto rep = DiffeoRep::from_samples(traj.displacement_field(1.0));
    auto report = is_member(rep);
    CHECK(report.member);
    CHECK(report.det_min > 0.1);
}

TEST_CASE("composition cross-checks the field concatenation") {
    auto ones = WeightSequence::ones(12);
    auto opts = flow_opts();
    opts.grid = GridSpec{1, 3.0, 257, QuadratureRule::trapezoid};
    auto u = autonomous_field(VectorForm({form_sin_axis(1, 0, 0.5)}));
    auto v = autonomous_field(VectorForm({form_gaussian(1, 0.4, {0.3}, 1.1)}));

    auto traj_u = glue_flow(u, 1.0, ones, opts);
    auto traj_w = glue_flow(concat_fields(u, v), 1.0, ones, opts);

    // Phi_v(1) o Phi_u(1) with the second stage solved from the off-grid
    // endpoints of the first
    std::vector<Vec> mids;
    for (std::size_t i = 0; i < traj_u.grid().size(); ++i) mids.push_back(traj_u.position(1.0, i));
    auto composed = flow_endpoints(*v, 1.0, ones, opts, mids);

    double worst = 0.0;
    for (std::size_t i = 0; i < traj_w.grid().size(); ++i)
        worst = std::max(worst, std::abs(traj_w.position(1.0, i)[0] - composed[i][0]));
    CHECK(worst <= 1e-6);

    // interpolation-backed DiffeoRep composition agrees within the stencil
    // error of the grid
    auto traj_v = glue_flow(v, 1.0, ones, opts);
    auto rep_u = DiffeoRep::from_samples(traj_u.displacement_field(1.0));
    auto rep_v = DiffeoRep::from_samples(traj_v.displacement_field(1.0));
    auto rep_comp = compose(rep_u, rep_v);
    double interp_err = 0.0;
    for (std::size_t i = 0; i < traj_w.grid().size(); ++i) {
        Vec x = traj_w.grid().node(i);
        interp_err = std::max(interp_err,
                              std::abs(traj_w.position(1.0, i)[0] - rep_comp.eval(x)[0]));
    }
    CHECK(interp_err <= 1e-6);
}
