#include "motivic/io.h"
#include "motivic/errors.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef MOTIVIC_DATA_DIR
#define MOTIVIC_DATA_DIR "data"
#endif

namespace motivic {

std::filesystem::path data_dir()
{
    if (const char* env = std::getenv("MOTIVIC_STEMS_DATA"); env && *env)
        return env;
    return MOTIVIC_DATA_DIR;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path.string());
    out << text;
    if (!out)
        throw Error("write failed: " + path.string());
}

std::filesystem::path sample_chart_path()
{
    return data_dir() / "sample_chart.txt";
}

std::filesystem::path stems_path()
{
    return data_dir() / "stems.txt";
}

}  // namespace motivic
