#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "sslab/analytics.hpp"

namespace sslab {

// Append-only JSONL experiment store, one record per line.
void append_records(const std::filesystem::path& path,
                    std::span<const ExperimentRecord> records);

std::vector<ExperimentRecord> read_records(const std::filesystem::path& path);

}  // namespace sslab
