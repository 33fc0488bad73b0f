#include "shapedyn/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace shapedyn {

CsvWriter::CsvWriter(const std::filesystem::path& path) : path_(path.string()) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path_, std::ios::trunc);
    if (!out) throw ConfigError("cannot open " + path_);
}

std::ofstream CsvWriter::stream() { return std::ofstream(path_, std::ios::app); }

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

void CsvWriter::header(const std::vector<std::string>& names) {
    std::vector<std::string> fields;
    fields.reserve(names.size());
    for (const auto& n : names) fields.push_back(csv_escape(n));
    raw_row(fields);
    header_written_ = true;
}

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> fields;
    fields.reserve(values.size());
    for (double v : values) fields.push_back(format_double(v));
    raw_row(fields);
}

void CsvWriter::raw_row(const std::vector<std::string>& fields) {
    auto out = stream();
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << fields[i];
    }
    out << "\r\n";
}

void write_json(const std::filesystem::path& path, const Json& j) {
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ConfigError("cannot open " + path.string());
    out << j.dump(2) << '\n';
}

void write_trajectory_csv(const std::filesystem::path& path, const ConformalModel& model,
                          const TrajectoryRecord& traj, int stride) {
    CsvWriter csv(path);
    std::vector<std::string> names = {"t"};
    int n = traj.size() ? traj.states[0].config.particle_count() : 0;
    for (int a = 0; a < n; ++a)
        for (const char* c : {"x", "y", "z"})
            names.push_back("q" + std::to_string(a + 1) + c);
    for (const char* c : {"E", "Px", "Py", "Pz", "Jx", "Jy", "Jz", "D"}) names.push_back(c);
    csv.header(names);
    for (std::size_t i = 0; i < traj.size(); i += stride) {
        std::vector<double> row = {traj.times[i]};
        const auto& s = traj.states[i];
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < 3; ++c) row.push_back(s.config.positions(c, a));
        row.push_back(traj.energy(model, i));
        Vec3 p = traj.momentum(i);
        Vec3 j = traj.angular_momentum(i);
        for (int c = 0; c < 3; ++c) row.push_back(p[c]);
        for (int c = 0; c < 3; ++c) row.push_back(j[c]);
        row.push_back(traj.dilational(i));
        csv.row(row);
    }
}

void write_shape_path_csv(const std::filesystem::path& path, const ShapePath& path_data) {
    CsvWriter csv(path);
    csv.header({"param", "re", "im"});
    for (std::size_t i = 0; i < path_data.size(); ++i) {
        double p = i < path_data.params.size() ? path_data.params[i] : double(i);
        csv.row({p, path_data.points[i].real(), path_data.points[i].imag()});
    }
}

}  // namespace shapedyn
