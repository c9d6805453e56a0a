#include "sslab/store.hpp"

#include <fstream>
#include <stdexcept>

namespace sslab {

void append_records(const std::filesystem::path& path,
                    std::span<const ExperimentRecord> records) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for append");
    for (const auto& r : records) {
        nlohmann::json j = r;
        out << j.dump() << '\n';
    }
}

std::vector<ExperimentRecord> read_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<ExperimentRecord> records;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            records.push_back(nlohmann::json::parse(line).get<ExperimentRecord>());
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": bad record: " + e.what());
        }
    }
    return records;
}

}  // namespace sslab
