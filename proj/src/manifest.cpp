#include "vortex_twm/manifest.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <openssl/evp.h>

#include "vortex_twm/error.hpp"

namespace vortex_twm
{

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string sha256_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return sha256_hex(bytes);
}

Manifest::Manifest(std::filesystem::path out_dir) : out_dir_(std::move(out_dir))
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir_, ec);
    if (ec)
        throw IoError("cannot create " + out_dir_.string() + ": " + ec.message());
}

std::filesystem::path Manifest::prepare(const std::string &relative) const
{
    const auto path = out_dir_ / relative;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
        throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
    return path;
}

void Manifest::add(const std::string &relative)
{
    const auto path = out_dir_ / relative;
    std::error_code ec;
    const auto size = std::filesystem::file_size(path, ec);
    if (ec)
        throw IoError("cannot stat " + path.string() + ": " + ec.message());
    entries_.push_back({relative, size, sha256_file(path)});
}

void Manifest::add_text(const std::string &relative, const std::string &text)
{
    const auto path = prepare(relative);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out)
        throw IoError("write failed for " + path.string());
    add(relative);
}

nlohmann::json Manifest::to_json() const
{
    nlohmann::json files = nlohmann::json::array();
    for (const auto &e : entries_)
        files.push_back({{"path", e.path}, {"bytes", e.bytes}, {"sha256", e.sha256}});
    return files;
}

void Manifest::write(const nlohmann::json &header) const
{
    nlohmann::json doc = header;
    doc["files"] = to_json();
    const auto path = out_dir_ / "manifest.json";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out)
        throw IoError("write failed for " + path.string());
}

} // namespace vortex_twm
