#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace specflow::cli {

int cmd_spectrum(const std::string& config_path, const std::string& out_dir);
int cmd_track(const std::string& config_path, const std::string& out_dir, bool svg);
int cmd_distance(const std::string& config_path);
int cmd_counterexample(const std::vector<int>& delta, const std::vector<long>& f,
                       std::size_t count);
int cmd_constants();

}  // namespace specflow::cli
