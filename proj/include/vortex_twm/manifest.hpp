// manifest.hpp - record of every file a run writes.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace vortex_twm
{

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path &path);

struct ManifestEntry
{
    std::string path;   // relative to the output directory, '/' separated
    std::uintmax_t bytes = 0;
    std::string sha256;
};

class Manifest
{
public:
    explicit Manifest(std::filesystem::path out_dir);

    const std::filesystem::path &out_dir() const noexcept { return out_dir_; }
    const std::vector<ManifestEntry> &entries() const noexcept { return entries_; }

    // Absolute path for `relative`, creating parent directories.
    std::filesystem::path prepare(const std::string &relative) const;

    // Hashes a file already written under out_dir.
    void add(const std::string &relative);

    // Writes a text file and records it.
    void add_text(const std::string &relative, const std::string &text);

    nlohmann::json to_json() const;

    // Writes manifest.json with `header` merged in (config echo, notes, warnings).
    void write(const nlohmann::json &header) const;

private:
    std::filesystem::path out_dir_;
    std::vector<ManifestEntry> entries_;
};

} // namespace vortex_twm
