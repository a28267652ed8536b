#include "arctomo/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "arctomo/metrics.hpp"

namespace arctomo {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string tuple_desc(const SweepRecord& r) {
    return "delta=" + fmt_double(r.delta) + " x0max=" + fmt_double(r.x0_max) +
           " dx0=" + fmt_double(r.delta_x0) + " rmax=" + fmt_double(r.r_max) +
           " dr=" + fmt_double(r.delta_r) + " epsilon=" + fmt_double(r.epsilon);
}

}  // namespace

void SweepConfig::validate() const {
    if (n < 16)
        throw std::invalid_argument("SweepConfig: n must be >= 16");
    if (deltas.empty() || x0_maxes.empty() || delta_x0s.empty() || r_maxes.empty() ||
        delta_rs.empty() || epsilons.empty())
        throw std::invalid_argument("SweepConfig: every parameter list must be nonempty");
    if (arc_step <= 0.0)
        throw std::invalid_argument("SweepConfig: arc_step must be > 0");
    if (pad_factor < 1)
        throw std::invalid_argument("SweepConfig: pad_factor must be >= 1");
    for (double d : deltas)
        if (d < 0.0) throw std::invalid_argument("SweepConfig: delta must be >= 0");
    for (double e : epsilons)
        if (e <= 0.0) throw std::invalid_argument("SweepConfig: epsilon must be > 0");
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<SweepRecord> records;
    for (double delta : cfg.deltas)
        for (double x0_max : cfg.x0_maxes)
            for (double dx0 : cfg.delta_x0s)
                for (double r_max : cfg.r_maxes)
                    for (double dr : cfg.delta_rs)
                        for (double epsilon : cfg.epsilons) {
                            SweepRecord rec{delta, x0_max, dx0, r_max, dr, epsilon, 0.0, 0.0};
                            const auto start = std::chrono::steady_clock::now();
                            try {
                                const ImageGrid phantom = generate_phantom(cfg.phantom, cfg.n, delta);
                                ScanGeometry geom;
                                geom.x0_max = x0_max;
                                geom.delta_x0 = dx0;
                                geom.r_max = r_max;
                                geom.delta_r = dr;
                                geom.arc_step = cfg.arc_step;
                                const Sinogram sino = project(phantom, geom);
                                ReconConfig rc;
                                rc.epsilon = epsilon;
                                rc.pad_factor = cfg.pad_factor;
                                const ImageGrid rec_img = reconstruct(sino, cfg.n, delta, rc);
                                rec.nmse = nmse(rec_img, phantom);
                            } catch (const std::exception& e) {
                                throw std::runtime_error("sweep run failed at " + tuple_desc(rec) +
                                                         ": " + e.what());
                            }
                            rec.seconds =
                                std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                                    .count();
                            records.push_back(rec);
                        }
    return records;
}

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << "delta,x0max,dx0,rmax,dr,epsilon,nmse,seconds\n";
    for (const SweepRecord& r : records) {
        out << fmt_double(r.delta) << ',' << fmt_double(r.x0_max) << ','
            << fmt_double(r.delta_x0) << ',' << fmt_double(r.r_max) << ','
            << fmt_double(r.delta_r) << ',' << fmt_double(r.epsilon) << ','
            << fmt_double(r.nmse) << ',' << fmt_double(r.seconds) << '\n';
    }
}

}  // namespace arctomo
