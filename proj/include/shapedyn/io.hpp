#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shapedyn/classical.hpp"

namespace shapedyn {

// Note: nlohmann::json (std::map-backed) keeps keys sorted, which the result
// files rely on for byte-stable reruns.
using Json = nlohmann::json;

// RFC-4180 style CSV writer: comma separator, quoted fields when needed.
class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path);
    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& fields);

private:
    std::string path_;
    std::ofstream stream();
    bool header_written_ = false;
};

void write_json(const std::filesystem::path& path, const Json& j);

// Trajectory table: t, positions..., E, Px, Py, Pz, Jx, Jy, Jz, D.
void write_trajectory_csv(const std::filesystem::path& path, const ConformalModel& model,
                          const TrajectoryRecord& traj, int stride = 1);

// Shape path table: param, re, im.
void write_shape_path_csv(const std::filesystem::path& path, const ShapePath& path_data);

}  // namespace shapedyn
