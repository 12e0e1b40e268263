#include "coinv/cache.hpp"

#include "coinv/errors.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace coinv {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return out.str();
}

const CacheEntry* CacheManifest::find(std::string_view kind, int n) const
{
    for (const auto& e : entries)
        if (e.kind == kind && e.n == n)
            return &e;
    return nullptr;
}

void CacheManifest::upsert(CacheEntry entry)
{
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const CacheEntry& e) { return e.kind == entry.kind && e.n == entry.n; });
    if (it != entries.end())
        *it = std::move(entry);
    else
        entries.push_back(std::move(entry));
    std::sort(entries.begin(), entries.end(), [](const CacheEntry& a, const CacheEntry& b) {
        return std::tie(a.kind, a.n) < std::tie(b.kind, b.n);
    });
}

Json CacheManifest::to_json() const
{
    Json list = Json::array();
    for (const auto& e : entries)
        list.push_back(Json{{"kind", e.kind}, {"n", e.n}, {"file", e.file}, {"digest", e.digest}});
    return Json{{"schema_version", schema_version}, {"entries", std::move(list)}};
}

CacheManifest CacheManifest::from_json(const Json& j)
{
    if (!j.is_object() || j.value("schema_version", -1) != kSchemaVersion)
        throw SchemaError("cache manifest schema version mismatch");
    CacheManifest m;
    for (const auto& e : j.at("entries"))
        m.upsert({e.at("kind").get<std::string>(), e.at("n").get<int>(), e.at("file").get<std::string>(),
                  e.at("digest").get<std::string>()});
    return m;
}

DiskTableCache::DiskTableCache(fs::path dir, Limits limits, std::ostream* warnings)
    : dir_(std::move(dir)), limits_(limits), warnings_(warnings)
{
    fs::create_directories(dir_);
}

std::string DiskTableCache::file_name(std::string_view kind, int n)
{
    return std::string(kind) + "-" + std::to_string(n) + ".json";
}

DiskTableCache::Stats DiskTableCache::stats() const
{
    std::lock_guard lock(state_mutex_);
    return stats_;
}

std::vector<CacheEntry> DiskTableCache::used_entries() const
{
    std::lock_guard lock(state_mutex_);
    std::vector<CacheEntry> out;
    for (const auto& [key, entry] : used_)
        out.push_back(entry);
    return out;
}

std::mutex& DiskTableCache::key_mutex(std::string_view kind, int n)
{
    std::lock_guard lock(state_mutex_);
    auto& slot = key_mutexes_[{std::string(kind), n}];
    if (!slot)
        slot = std::make_unique<std::mutex>();
    return *slot;
}

void DiskTableCache::warn(const std::string& message)
{
    if (warnings_)
        *warnings_ << "warning: " << message << "\n";
}

namespace {

std::optional<std::string> read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

CacheManifest DiskTableCache::read_manifest() const
{
    std::lock_guard lock(manifest_mutex_);
    const auto text = read_file(dir_ / "manifest.json");
    if (!text)
        return {};
    try {
        return CacheManifest::from_json(Json::parse(*text));
    } catch (const std::exception&) {
        return {};
    }
}

void DiskTableCache::write_atomically(const fs::path& target, std::string_view bytes) const
{
    static std::atomic<unsigned> counter{0};
    std::ostringstream suffix;
    suffix << ".tmp-" << std::this_thread::get_id() << "-" << counter.fetch_add(1);
    const fs::path temp = target.string() + suffix.str();
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache file " + temp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out)
            throw std::runtime_error("short write to cache file " + temp.string());
    }
    fs::rename(temp, target);
}

void DiskTableCache::record(CacheEntry entry)
{
    std::lock_guard lock(state_mutex_);
    used_[{entry.kind, entry.n}] = std::move(entry);
}

template <class Table>
std::shared_ptr<const Table> DiskTableCache::get_or_build(std::string_view kind, int n,
                                                          std::map<int, std::shared_ptr<const Table>>& memo,
                                                          const std::function<Table()>& build,
                                                          const std::function<Table(const Json&)>& parse,
                                                          const std::function<bool(const Table&)>& validate)
{
    std::lock_guard key_lock(key_mutex(kind, n));
    {
        std::lock_guard lock(state_mutex_);
        if (auto it = memo.find(n); it != memo.end())
            return it->second;
    }

    const std::string name = file_name(kind, n);
    const fs::path path = dir_ / name;
    std::shared_ptr<const Table> table;

    if (const CacheManifest manifest = read_manifest(); const CacheEntry* entry = manifest.find(kind, n)) {
        if (const auto bytes = read_file(path)) {
            if (sha256_hex(*bytes) != entry->digest) {
                warn("cache file " + path.string() + " does not match its digest; rebuilding");
            } else {
                try {
                    Table loaded = parse(Json::parse(*bytes));
                    if (validate(loaded)) {
                        table = std::make_shared<const Table>(std::move(loaded));
                        record(*entry);
                        std::lock_guard lock(state_mutex_);
                        ++stats_.loaded;
                    } else {
                        warn("cache file " + path.string() + " fails validation; rebuilding");
                    }
                } catch (const std::exception& e) {
                    warn("cache file " + path.string() + " is unreadable (" + e.what() + "); rebuilding");
                }
            }
            if (!table) {
                std::lock_guard lock(state_mutex_);
                ++stats_.rejected;
            }
        }
    }

    if (!table) {
        table = std::make_shared<const Table>(build());
        const std::string bytes = to_json(*table).dump(1) + "\n";
        write_atomically(path, bytes);
        CacheEntry entry{std::string(kind), n, name, sha256_hex(bytes)};
        {
            std::lock_guard lock(manifest_mutex_);
            CacheManifest manifest;
            if (const auto text = read_file(dir_ / "manifest.json")) {
                try {
                    manifest = CacheManifest::from_json(Json::parse(*text));
                } catch (const std::exception&) {
                    warn("cache manifest is unreadable; starting a new one");
                }
            }
            manifest.upsert(entry);
            write_atomically(dir_ / "manifest.json", manifest.to_json().dump(2) + "\n");
        }
        record(std::move(entry));
        std::lock_guard lock(state_mutex_);
        ++stats_.built;
    }

    std::lock_guard lock(state_mutex_);
    return memo.emplace(n, std::move(table)).first->second;
}

std::shared_ptr<const CharacterTable> DiskTableCache::characters(int n)
{
    if (n > limits_.character_cap)
        throw LimitExceeded("character table for n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(limits_.character_cap));
    return get_or_build<CharacterTable>(
        "char", n, characters_, [&] { return build_character_table(n, limits_.character_cap); },
        character_table_from_json, verify_orthogonality);
}

std::shared_ptr<const KroneckerTable> DiskTableCache::kronecker(int n)
{
    if (n > limits_.kronecker_cap)
        throw LimitExceeded("Kronecker table for n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(limits_.kronecker_cap));
    return get_or_build<KroneckerTable>(
        "kron", n, kronecker_,
        [&] { return build_kronecker_table(*characters(n), limits_.kronecker_cap); },
        kronecker_table_from_json, verify_kronecker_identities);
}

std::shared_ptr<const GradedMultiplicityTable> DiskTableCache::graded(int n)
{
    return get_or_build<GradedMultiplicityTable>("graded", n, graded_, [&] { return build_graded_table(n); },
                                                 graded_table_from_json, verify_graded_identities);
}

} // namespace coinv
