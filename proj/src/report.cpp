#include "ptscatter/report.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ptscatter::report {

namespace {

using nlohmann::ordered_json;

double log_clamp(double v) {
    if (!std::isfinite(v)) return v > 0.0 ? 1e12 : 1e-12;
    return std::min(1e12, std::max(1e-12, v));
}

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", x);
    return buf;
}

std::string scan_csv(const analysis::ScanTable& table) {
    std::string out = "epsilon,R_left,R_right,T,defect,singular\n";
    for (const analysis::ScanRow& r : table.rows) {
        out += format_number(r.epsilon);
        out += ',';
        out += format_number(r.R_left);
        out += ',';
        out += format_number(r.R_right);
        out += ',';
        out += format_number(r.T);
        out += ',';
        out += format_number(r.defect);
        out += ',';
        out += r.singular ? '1' : '0';
        out += '\n';
    }
    return out;
}

void write_scan_csv(const analysis::ScanTable& table, const std::string& path) {
    write_text_file(path, scan_csv(table));
}

std::vector<analysis::ScanRow> parse_scan_csv(const std::string& text) {
    std::vector<analysis::ScanRow> rows;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("parse_scan_csv: empty input");
    if (line != "epsilon,R_left,R_right,T,defect,singular")
        throw std::runtime_error("parse_scan_csv: unexpected header: " + line);
    auto parse_field = [](const std::string& s) {
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        return std::stod(s);
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 6) throw std::runtime_error("parse_scan_csv: bad row: " + line);
        analysis::ScanRow r{};
        r.epsilon = parse_field(fields[0]);
        r.R_left = parse_field(fields[1]);
        r.R_right = parse_field(fields[2]);
        r.T = parse_field(fields[3]);
        r.defect = parse_field(fields[4]);
        r.singular = fields[5] == "1";
        rows.push_back(r);
    }
    return rows;
}

std::string features_json(const analysis::FeatureScan& scan) {
    ordered_json arr = ordered_json::array();
    for (const analysis::FeaturePoint& p : scan.points) {
        ordered_json obj;
        obj["kind"] = analysis::feature_kind_name(p.kind);
        obj["epsilon"] = p.epsilon;
        obj["residual"] = p.residual;
        obj["refined"] = p.refined;
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

void write_features_json(const analysis::FeatureScan& scan, const std::string& path) {
    write_text_file(path, features_json(scan));
}

std::string bound_table_csv(const std::vector<bound::BoundState>& states) {
    std::string out = "n,b_n,a_n_imag,epsilon_n,A_re,A_im\n";
    for (const bound::BoundState& s : states) {
        out += std::to_string(s.n);
        out += ',';
        out += format_number(s.b_n);
        out += ',';
        out += format_number(s.a_n.imag());
        out += ',';
        out += format_number(s.epsilon_n);
        out += ',';
        out += format_number(s.A_n.real());
        out += ',';
        out += format_number(s.A_n.imag());
        out += '\n';
    }
    return out;
}

std::string potential_csv(const std::vector<PotentialSample>& samples) {
    std::string out = "x,V_re,V_im\n";
    for (const PotentialSample& s : samples) {
        out += format_number(s.x);
        out += ',';
        out += format_number(s.value.real());
        out += ',';
        out += format_number(s.value.imag());
        out += '\n';
    }
    return out;
}

namespace {

struct SvgFrame {
    double x_lo, x_hi, y_lo, y_hi;
    static constexpr double left = 70.0, right = 930.0, top = 40.0, bottom = 560.0;

    double px(double x) const { return left + (right - left) * (x - x_lo) / (x_hi - x_lo); }
    double py(double y) const { return bottom - (bottom - top) * (y - y_lo) / (y_hi - y_lo); }
};

struct SeriesStyle {
    const char* name;
    const char* color;
    const char* dash;
};

constexpr SeriesStyle kSeriesStyle[] = {
    {"R_left", "#101010", ""},
    {"R_right", "#909090", ""},
    {"T", "#3060c0", "6,4"},
    {"defect", "#b03020", "2,3"},
};

const SeriesStyle& style_of(const std::string& name) {
    for (const SeriesStyle& s : kSeriesStyle)
        if (name == s.name) return s;
    throw std::domain_error("scan_svg: unknown series " + name);
}

double series_value(const analysis::ScanRow& r, const std::string& name) {
    if (name == "R_left") return r.R_left;
    if (name == "R_right") return r.R_right;
    if (name == "T") return r.T;
    return r.defect;
}

} // namespace

std::string scan_svg(const analysis::ScanTable& table, const std::vector<std::string>& series,
                     const std::string& title) {
    if (table.rows.empty()) throw std::domain_error("scan_svg: empty table");
    SvgFrame frame{};
    frame.x_lo = table.rows.front().epsilon;
    frame.x_hi = table.rows.back().epsilon;
    double lo = 1e12, hi = 1e-12;
    for (const analysis::ScanRow& r : table.rows) {
        for (const std::string& name : series) {
            const double raw = series_value(r, name);
            if (std::isnan(raw)) continue;
            const double v = log_clamp(std::abs(raw));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    frame.y_lo = std::floor(std::log10(lo));
    frame.y_hi = std::ceil(std::log10(hi));
    if (frame.y_hi <= frame.y_lo) frame.y_hi = frame.y_lo + 1.0;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 600\" "
           "font-family=\"monospace\" font-size=\"13\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"70\" y=\"25\">" + title + "</text>\n";

    const double decades = frame.y_hi - frame.y_lo;
    const int decade_step = decades > 12.0 ? static_cast<int>(std::ceil(decades / 12.0)) : 1;
    for (double d = frame.y_lo; d <= frame.y_hi + 0.5; d += decade_step) {
        const double y = frame.py(d);
        svg += "<line x1=\"70\" x2=\"930\" y1=\"" + svg_coord(y) + "\" y2=\"" + svg_coord(y) +
               "\" stroke=\"#dddddd\"/>\n";
        char label[32];
        std::snprintf(label, sizeof label, "1e%+03d", static_cast<int>(d));
        svg += "<text x=\"6\" y=\"" + svg_coord(y + 4.0) + "\">" + label + "</text>\n";
    }
    for (int i = 0; i <= 8; ++i) {
        const double x = frame.x_lo + (frame.x_hi - frame.x_lo) * i / 8.0;
        const double px = frame.px(x);
        svg += "<line y1=\"560\" y2=\"566\" x1=\"" + svg_coord(px) + "\" x2=\"" + svg_coord(px) +
               "\" stroke=\"#101010\"/>\n";
        char label[40];
        std::snprintf(label, sizeof label, "%.4g", x);
        svg += "<text x=\"" + svg_coord(px - 14.0) + "\" y=\"582\">" + label + "</text>\n";
    }
    svg += "<rect x=\"70\" y=\"40\" width=\"860\" height=\"520\" fill=\"none\" "
           "stroke=\"#101010\"/>\n";

    double legend_y = 56.0;
    for (const std::string& name : series) {
        const SeriesStyle& style = style_of(name);
        std::string path;
        bool pen_down = false;
        for (const analysis::ScanRow& r : table.rows) {
            const double raw = series_value(r, name);
            if (std::isnan(raw)) {
                pen_down = false;
                continue;
            }
            const double y = frame.py(std::log10(log_clamp(std::abs(raw))));
            path += pen_down ? "L" : "M";
            path += svg_coord(frame.px(r.epsilon)) + " " + svg_coord(y) + " ";
            pen_down = true;
        }
        svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + style.color + "\"";
        if (style.dash[0] != '\0') svg += " stroke-dasharray=\"" + std::string(style.dash) + "\"";
        svg += "/>\n";
        svg += "<text x=\"800\" y=\"" + svg_coord(legend_y) + "\" fill=\"" + style.color + "\">" +
               name + "</text>\n";
        legend_y += 16.0;
    }
    svg += "</svg>\n";
    return svg;
}

void write_scan_svg(const analysis::ScanTable& table, const std::vector<std::string>& series,
                    const std::string& title, const std::string& path) {
    write_text_file(path, scan_svg(table, series, title));
}

std::string potential_svg(const std::vector<PotentialSample>& samples, const std::string& title) {
    if (samples.empty()) throw std::domain_error("potential_svg: no samples");
    SvgFrame frame{};
    frame.x_lo = samples.front().x;
    frame.x_hi = samples.back().x;
    frame.y_lo = 0.0;
    frame.y_hi = 0.0;
    for (const PotentialSample& s : samples) {
        frame.y_lo = std::min({frame.y_lo, s.value.real(), s.value.imag()});
        frame.y_hi = std::max({frame.y_hi, s.value.real(), s.value.imag()});
    }
    const double pad = 0.05 * (frame.y_hi - frame.y_lo + 1e-12);
    frame.y_lo -= pad;
    frame.y_hi += pad;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 600\" "
           "font-family=\"monospace\" font-size=\"13\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"70\" y=\"25\">" + title + "</text>\n";
    if (frame.y_lo < 0.0 && frame.y_hi > 0.0) {
        const double y0 = frame.py(0.0);
        svg += "<line x1=\"70\" x2=\"930\" y1=\"" + svg_coord(y0) + "\" y2=\"" + svg_coord(y0) +
               "\" stroke=\"#dddddd\"/>\n";
    }
    const char* colors[2] = {"#101010", "#b03020"};
    const char* labels[2] = {"Re V", "Im V"};
    for (int part = 0; part < 2; ++part) {
        std::string path;
        bool pen_down = false;
        for (const PotentialSample& s : samples) {
            const double v = part == 0 ? s.value.real() : s.value.imag();
            path += pen_down ? "L" : "M";
            path += svg_coord(frame.px(s.x)) + " " + svg_coord(frame.py(v)) + " ";
            pen_down = true;
        }
        svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + std::string(colors[part]) +
               "\"/>\n";
        svg += "<text x=\"800\" y=\"" + svg_coord(56.0 + 16.0 * part) + "\" fill=\"" +
               colors[part] + "\">" + labels[part] + "</text>\n";
    }
    svg += "<rect x=\"70\" y=\"40\" width=\"860\" height=\"520\" fill=\"none\" "
           "stroke=\"#101010\"/>\n";
    svg += "</svg>\n";
    return svg;
}

std::string job_to_json(const JobConfig& job) {
    ordered_json j;
    j["command"] = job.command;
    j["case"] = job.case_name;
    j["v"] = job.v;
    j["mu"] = job.mu;
    j["zeta"] = job.zeta;
    j["emin"] = job.eps_min;
    j["emax"] = job.eps_max;
    j["steps"] = job.steps;
    j["kind"] = job.kind;
    j["xmin"] = job.x_min;
    j["xmax"] = job.x_max;
    j["samples"] = job.samples;
    j["tol"] = job.tol;
    j["seed"] = job.seed;
    j["figure"] = job.figure_id;
    j["flux_corrected"] = job.flux_corrected;
    j["out"] = job.out;
    j["format"] = job.format;
    return j.dump(2) + "\n";
}

JobConfig job_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    JobConfig job;
    job.command = j.at("command").get<std::string>();
    job.case_name = j.value("case", job.case_name);
    job.v = j.value("v", job.v);
    job.mu = j.value("mu", job.mu);
    job.zeta = j.value("zeta", job.zeta);
    job.eps_min = j.value("emin", job.eps_min);
    job.eps_max = j.value("emax", job.eps_max);
    job.steps = j.value("steps", job.steps);
    job.kind = j.value("kind", job.kind);
    job.x_min = j.value("xmin", job.x_min);
    job.x_max = j.value("xmax", job.x_max);
    job.samples = j.value("samples", job.samples);
    job.tol = j.value("tol", job.tol);
    job.seed = j.value("seed", job.seed);
    job.figure_id = j.value("figure", job.figure_id);
    job.flux_corrected = j.value("flux_corrected", job.flux_corrected);
    job.out = j.value("out", job.out);
    job.format = j.value("format", job.format);
    return job;
}

JobConfig load_job_file(const std::string& path) { return job_from_json(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace ptscatter::report
