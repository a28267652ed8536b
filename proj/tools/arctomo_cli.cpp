// Command-line front end: phantom generation, forward projection,
// reconstruction, metrics, rendering and parameter sweeps over ARCG files.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "arctomo/grid_io.hpp"
#include "arctomo/metrics.hpp"
#include "arctomo/phantom.hpp"
#include "arctomo/recon.hpp"
#include "arctomo/sweep.hpp"

namespace {

using namespace arctomo;

PhantomSpec parse_phantom(const std::string& type, const std::vector<double>& point,
                          const std::vector<std::vector<double>>& disks,
                          const std::vector<double>& box) {
    if (type == "derenzo") return PhantomSpec::derenzo();
    if (type == "point") {
        if (point.size() != 3)
            throw CLI::ValidationError("--point needs x,z,intensity");
        return PhantomSpec::point(point[0], point[1], point[2]);
    }
    if (type == "disks") {
        if (disks.empty())
            throw CLI::ValidationError("--type disks needs at least one --disk");
        std::vector<Disk> ds;
        for (const auto& d : disks) {
            if (d.size() != 4)
                throw CLI::ValidationError("--disk needs cx,cz,radius,intensity");
            ds.push_back({d[0], d[1], d[2], d[3]});
        }
        return PhantomSpec::from_disks(std::move(ds));
    }
    if (type == "box") {
        if (box.size() != 5)
            throw CLI::ValidationError("--box needs xlo,xhi,zlo,zhi,intensity");
        return PhantomSpec::box(box[0], box[1], box[2], box[3], box[4]);
    }
    throw CLI::ValidationError("unknown phantom type: " + type);
}

ScanGeometry make_geom(int n, double x0max, double dx0, double rmax, double dr,
                       double arc_step) {
    ScanGeometry g;
    g.x0_max = x0max > 0.0 ? x0max : 3.0 * n;
    g.delta_x0 = dx0;
    g.r_max = rmax > 0.0 ? rmax : 3.0 * n;
    g.delta_r = dr;
    g.arc_step = arc_step;
    return g;
}

const ImageGrid& require_image(const Grid& g, const std::string& path) {
    if (!std::holds_alternative<ImageGrid>(g))
        throw std::runtime_error(path + " is not an image grid");
    return std::get<ImageGrid>(g);
}

const Sinogram& require_sinogram(const Grid& g, const std::string& path) {
    if (!std::holds_alternative<Sinogram>(g))
        throw std::runtime_error(path + " is not a sinogram grid");
    return std::get<Sinogram>(g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radon transform on double circle arcs: simulation and reconstruction"};
    app.require_subcommand(1);

    // phantom
    auto* cmd_phantom = app.add_subcommand("phantom", "generate a test object");
    int ph_n = 128;
    double ph_delta = 0.0;
    std::string ph_type = "derenzo";
    std::vector<double> ph_point;
    std::vector<std::vector<double>> ph_disks;
    std::vector<double> ph_box;
    std::string ph_out;
    cmd_phantom->set_config("--config");
    cmd_phantom->add_option("--n", ph_n, "image size (n x n)");
    cmd_phantom->add_option("--delta", ph_delta, "gap to the detector line, pixels");
    cmd_phantom->add_option("--type", ph_type, "derenzo|point|disks|box");
    cmd_phantom->add_option("--point", ph_point, "x,z,intensity")->delimiter(',');
    cmd_phantom->add_option("--disk", ph_disks, "cx,cz,radius,intensity (repeatable)")
        ->delimiter(',');
    cmd_phantom->add_option("--box", ph_box, "xlo,xhi,zlo,zhi,intensity")->delimiter(',');
    cmd_phantom->add_option("-o,--output", ph_out, "output .arcg path")->required();

    // forward
    auto* cmd_forward = app.add_subcommand("forward", "project an image to a sinogram");
    std::string fw_in, fw_out;
    double fw_x0max = 0.0, fw_dx0 = 1.0, fw_rmax = 0.0, fw_dr = 1.0, fw_arc = 0.5;
    cmd_forward->set_config("--config");
    cmd_forward->add_option("input", fw_in, "input image .arcg")->required();
    cmd_forward->add_option("--x0max", fw_x0max, "sensor range (default 3n)");
    cmd_forward->add_option("--dx0", fw_dx0, "sensor spacing");
    cmd_forward->add_option("--rmax", fw_rmax, "largest radius (default 3n)");
    cmd_forward->add_option("--dr", fw_dr, "radius spacing");
    cmd_forward->add_option("--arc-step", fw_arc, "arc sample spacing");
    cmd_forward->add_option("-o,--output", fw_out, "output sinogram .arcg")->required();

    // reconstruct
    auto* cmd_recon = app.add_subcommand("reconstruct", "invert a sinogram");
    std::string rc_in, rc_out;
    int rc_n = 128, rc_pad = 2;
    double rc_delta = 0.0, rc_eps = 0.01;
    cmd_recon->set_config("--config");
    cmd_recon->add_option("input", rc_in, "input sinogram .arcg")->required();
    cmd_recon->add_option("--n", rc_n, "output image size")->required();
    cmd_recon->add_option("--delta", rc_delta, "gap to the detector line, pixels");
    cmd_recon->add_option("--epsilon", rc_eps, "filter regularization");
    cmd_recon->add_option("--pad", rc_pad, "FFT zero-padding factor");
    cmd_recon->add_option("-o,--output", rc_out, "output image .arcg")->required();

    // nmse
    auto* cmd_nmse = app.add_subcommand("nmse", "normalized mean squared error");
    std::string nm_a, nm_b;
    cmd_nmse->add_option("reconstruction", nm_a, "image .arcg")->required();
    cmd_nmse->add_option("reference", nm_b, "image .arcg")->required();

    // render
    auto* cmd_render = app.add_subcommand("render", "write an 8-bit PGM view");
    std::string rd_in, rd_out;
    cmd_render->add_option("input", rd_in, "input .arcg")->required();
    cmd_render->add_option("-o,--output", rd_out, "output .pgm path")->required();

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "parameter study, one CSV row per run");
    SweepConfig sw;
    std::string sw_type = "derenzo";
    std::string sw_out;
    cmd_sweep->set_config("--config");
    cmd_sweep->add_option("--n", sw.n, "image size");
    cmd_sweep->add_option("--type", sw_type, "phantom type (derenzo)");
    cmd_sweep->add_option("--delta", sw.deltas, "gap values")->delimiter(',')->required();
    cmd_sweep->add_option("--x0max", sw.x0_maxes, "sensor ranges")->delimiter(',')->required();
    cmd_sweep->add_option("--dx0", sw.delta_x0s, "sensor spacings")->delimiter(',')->required();
    cmd_sweep->add_option("--rmax", sw.r_maxes, "largest radii")->delimiter(',')->required();
    cmd_sweep->add_option("--dr", sw.delta_rs, "radius spacings")->delimiter(',')->required();
    cmd_sweep->add_option("--epsilon", sw.epsilons, "regularizations")->delimiter(',')->required();
    cmd_sweep->add_option("--arc-step", sw.arc_step, "arc sample spacing");
    cmd_sweep->add_option("--pad", sw.pad_factor, "FFT zero-padding factor");
    cmd_sweep->add_option("-o,--output", sw_out, "output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_phantom->parsed()) {
            const PhantomSpec spec = parse_phantom(ph_type, ph_point, ph_disks, ph_box);
            write_grid(generate_phantom(spec, ph_n, ph_delta), ph_out);
        } else if (cmd_forward->parsed()) {
            const Grid in = read_grid(fw_in);
            const ImageGrid& img = require_image(in, fw_in);
            const ScanGeometry geom =
                make_geom(img.nx, fw_x0max, fw_dx0, fw_rmax, fw_dr, fw_arc);
            write_grid(project(img, geom), fw_out);
        } else if (cmd_recon->parsed()) {
            const Grid in = read_grid(rc_in);
            const Sinogram& sino = require_sinogram(in, rc_in);
            ReconConfig cfg;
            cfg.epsilon = rc_eps;
            cfg.pad_factor = rc_pad;
            write_grid(reconstruct(sino, rc_n, rc_delta, cfg), rc_out);
        } else if (cmd_nmse->parsed()) {
            const Grid a = read_grid(nm_a);
            const Grid b = read_grid(nm_b);
            std::printf("%.17g\n", nmse(require_image(a, nm_a), require_image(b, nm_b)));
        } else if (cmd_render->parsed()) {
            render(read_grid(rd_in), rd_out);
        } else if (cmd_sweep->parsed()) {
            if (sw_type != "derenzo")
                throw std::runtime_error("sweep supports only the derenzo phantom");
            const std::vector<SweepRecord> records = run_sweep(sw);
            std::ofstream out(sw_out, std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot open for writing: " + sw_out);
            write_sweep_csv(records, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
