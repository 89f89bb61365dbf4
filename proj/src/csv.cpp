#include "quadlip/io/csv.hpp"

#include "quadlip/io/format.hpp"

namespace quadlip::io {

namespace {

void append_vec(std::string& out, const Vec3<double>& p) {
    out += ',';
    out += format_double(p.x());
    out += ',';
    out += format_double(p.y());
    out += ',';
    out += format_double(p.z());
}

}  // namespace

std::string format_samples_csv(const std::vector<GaitSample<double>>& samples) {
    std::string out =
        "t,comF_x,comF_y,comF_z,comH_x,comH_y,comH_z,comQ_x,comQ_y,comQ_z,"
        "FL_x,FL_y,FL_z,FR_x,FR_y,FR_z,HL_x,HL_y,HL_z,HR_x,HR_y,HR_z,"
        "FL_sup,FR_sup,HL_sup,HR_sup\n";
    for (const auto& s : samples) {
        out += format_double(s.t);
        append_vec(out, s.com_fore);
        append_vec(out, s.com_hind);
        append_vec(out, s.com_quad);
        for (Foot f : kAllFeet) append_vec(out, s.foot[foot_index(f)]);
        for (Foot f : kAllFeet) {
            out += ',';
            out += s.support[foot_index(f)] ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string format_events_csv(const std::vector<GaitEvent<double>>& ev) {
    std::string out = "t,foot,kind,x,y,z\n";
    for (const auto& e : ev) {
        out += format_double(e.t);
        out += ',';
        out += foot_name(e.foot);
        out += ',';
        out += e.kind == EventKind::LiftOff ? "liftoff" : "touchdown";
        out += ',';
        out += format_double(e.position.x());
        out += ',';
        out += format_double(e.position.y());
        out += ',';
        out += format_double(e.position.z());
        out += '\n';
    }
    return out;
}

std::string format_sweep_csv(const std::vector<SweepRow<double>>& rows) {
    std::string out = "v,d_SL,d_SW,omega_S,A_y,A_z,z_max,fn_sqrt,fn_squared,class,feasible\n";
    for (const auto& r : rows) {
        out += format_double(r.velocity);
        out += ',';
        out += format_double(r.step_length);
        out += ',';
        out += format_double(r.step_width);
        out += ',';
        out += format_double(r.cadence);
        out += ',';
        out += format_double(r.lateral_amplitude);
        out += ',';
        out += format_double(r.vertical_amplitude);
        out += ',';
        out += format_double(r.apex_height);
        out += ',';
        out += format_double(r.froude_sqrt);
        out += ',';
        out += format_double(r.froude_squared);
        out += ',';
        out += band_name(r.band);
        out += ',';
        out += r.feasible ? '1' : '0';
        out += '\n';
    }
    return out;
}

void export_samples(const std::vector<GaitSample<double>>& samples, const std::string& path) {
    write_file(path, format_samples_csv(samples));
}

void export_events(const std::vector<GaitEvent<double>>& ev, const std::string& path) {
    write_file(path, format_events_csv(ev));
}

void export_sweep(const std::vector<SweepRow<double>>& rows, const std::string& path) {
    write_file(path, format_sweep_csv(rows));
}

std::string format_report(const FeasibilityReport<double>& rep) {
    std::string out;
    for (const auto& c : rep.checks) {
        out += c.name;
        out += c.pass ? " PASS margin=" : " FAIL margin=";
        out += format_double(c.margin);
        out += '\n';
    }
    out += rep.overall ? "OVERALL PASS\n" : "OVERALL FAIL\n";
    return out;
}

}  // namespace quadlip::io
