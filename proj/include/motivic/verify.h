#pragma once

#include "motivic/algebra.h"
#include "motivic/chart.h"
#include "motivic/render.h"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace motivic::verify {

struct CheckResult
{
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;
};

/* Exponent window for the built-in localized spectral sequence. */
Window acceptance_window();

std::vector<CheckResult> einfty(const Window& win);
std::vector<CheckResult> leibniz(const Window& win, std::size_t samples = 10000, std::uint64_t seed = 20150904);
std::vector<CheckResult> partition(std::int64_t max_abs = 1000);
std::vector<CheckResult> eta_local(std::int64_t s_max, const StemsTable* stems);
std::vector<CheckResult> vanishing(std::int64_t max_stem = 1000, std::size_t samples = 10000, std::uint64_t seed = 41);
std::vector<CheckResult> ctau(const std::filesystem::path& chart_file);
std::vector<CheckResult> localization(const std::filesystem::path& chart_file);
std::vector<CheckResult> families(std::int64_t kmax = 100, int nmax = 20);
std::vector<CheckResult> roundtrip(const std::filesystem::path& data);
std::vector<CheckResult> golden(const std::filesystem::path& data);

/* Canonical golden artifacts, regenerated identically on every call. */
std::string golden_regions_svg();
std::string golden_groups_tsv(const StemsTable& stems);

const std::vector<std::string_view>& suite_names();
/* Throws std::invalid_argument for an unknown suite. */
std::vector<CheckResult> run_suite(std::string_view name, const std::filesystem::path& data);

/* "[PASS] id description: detail" */
std::string format(const CheckResult& r);

}  // namespace motivic::verify
