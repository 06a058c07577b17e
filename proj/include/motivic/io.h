#pragma once

#include "motivic/chart.h"

#include <filesystem>
#include <string>

namespace motivic {

/* $MOTIVIC_STEMS_DATA if set, else the data directory of the source tree. */
std::filesystem::path data_dir();

/* Throws Error naming the path when it cannot be read. */
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

/* Bundled inputs under data_dir(). */
std::filesystem::path sample_chart_path();
std::filesystem::path stems_path();

}  // namespace motivic
